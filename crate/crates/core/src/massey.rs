//! Unipotent upper-triangular groups over Z/p and the witness machinery for
//! Massey products: an n-fold product is defined iff the superdiagonal tuple
//! lifts to a representation into U_{n+1} modulo its center, and vanishes iff
//! it lifts to U_{n+1} itself. RAAG tuples with vanishing consecutive cup
//! products get an explicit witness; small instances get an exhaustive
//! search oracle.

use crate::fp::Prime;
use crate::graph::SimplicialGraph;
use crate::pcentral::{pair_count, pair_index, GroupWord};
use crate::sr::{Cochain, SRAlgebra};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MasseyError {
    #[error("cup product of characters {0} and {1} is nonzero")]
    CupObstruction(usize, usize),
    #[error("generator images do not respect the presentation")]
    NotAHomomorphism,
    #[error("search space of {0} fillings exceeds the budget of {1}")]
    BudgetExceeded(u128, u128),
    #[error("expected {0} characters of length {1}")]
    ShapeMismatch(usize, usize),
}

/// Unipotent upper-triangular matrix: implicit 1-diagonal, strictly-upper
/// entries mod p stored row-major by pairs (i, j), i < j.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentMatrix {
    pub size: usize,
    pub p: Prime,
    entries: Vec<u32>,
}

impl std::fmt::Debug for UnipotentMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "U{}(Z/{})", self.size, self.p.get())?;
        for i in 0..self.size {
            let row: Vec<u32> = (0..self.size)
                .map(|j| if i == j { 1 } else if i < j { self.get(i, j) } else { 0 })
                .collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl UnipotentMatrix {
    pub fn identity(size: usize, p: Prime) -> Self {
        Self { size, p, entries: vec![0; pair_count(size)] }
    }

    /// The full Jordan block: ones along the whole superdiagonal.
    pub fn jordan_block(size: usize, p: Prime) -> Self {
        let mut m = Self::identity(size, p);
        for i in 0..size - 1 {
            m.set(i, i + 1, 1);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[pair_index(self.size, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[pair_index(self.size, i, j)] = v % self.p.get();
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Central elements are I + a·E_{1,n+1}: only the top-right corner.
    pub fn is_central(&self) -> bool {
        let corner = pair_index(self.size, 0, self.size - 1);
        self.entries.iter().enumerate().all(|(k, &x)| k == corner || x == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.size, other.size);
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = Self::identity(self.size, p);
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                let mut acc = p.add(self.get(i, j), other.get(i, j));
                for k in (i + 1)..j {
                    acc = p.add(acc, p.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Inverse of I + N via the terminating Neumann series.
    pub fn inverse(&self) -> Self {
        let p = self.p;
        let mut inv = Self::identity(self.size, p);
        // term = (-N)^k accumulated as a unipotent product step by step
        let mut neg = Self::identity(self.size, p);
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                neg.set(i, j, p.neg(self.get(i, j)));
            }
        }
        // (I + N)^{-1} = I + Σ_{k>=1} (-N)^k; compute with raw nilpotent parts
        let mut term = neg.entries.clone();
        let mut acc = term.clone();
        for _ in 2..self.size {
            let mut next = vec![0u32; term.len()];
            for i in 0..self.size {
                for j in (i + 1)..self.size {
                    let mut s = 0u32;
                    for k in (i + 1)..j {
                        s = p.add(
                            s,
                            p.mul(
                                term[pair_index(self.size, i, k)],
                                neg.entries[pair_index(self.size, k, j)],
                            ),
                        );
                    }
                    next[pair_index(self.size, i, j)] = s;
                }
            }
            for (a, &n) in acc.iter_mut().zip(&next) {
                *a = p.add(*a, n);
            }
            term = next;
        }
        inv.entries = acc;
        debug_assert!(self.mul(&inv).is_identity());
        inv
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.size, self.p);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate a word letter by letter.
    pub fn eval_word(images: &[UnipotentMatrix], w: &GroupWord) -> Self {
        let proto = &images[0];
        let mut acc = Self::identity(proto.size, proto.p);
        for &(g, s) in &w.letters {
            let m = if s >= 0 { images[g].clone() } else { images[g].inverse() };
            acc = acc.mul(&m);
        }
        acc
    }

    pub fn superdiagonal(&self) -> Vec<u32> {
        (0..self.size - 1).map(|i| self.get(i, i + 1)).collect()
    }

    /// Full matrix rows including the unit diagonal, for display.
    pub fn dense(&self) -> Vec<Vec<u32>> {
        (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| match j.cmp(&i) {
                        std::cmp::Ordering::Equal => 1,
                        std::cmp::Ordering::Greater => self.get(i, j),
                        std::cmp::Ordering::Less => 0,
                    })
                    .collect()
            })
            .collect()
    }
}

/// Generators-and-relators data for a finitely presented pro-p group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<GroupWord>,
}

impl Presentation {
    /// The RAAG presentation: one commutator relator per edge. Checking a
    /// map into a finite group like U_{n+1} only needs these relators; the
    /// pro-p completion adds no constraints on finite images.
    pub fn raag(g: &SimplicialGraph) -> Self {
        let d = g.vertex_count();
        let relators = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                GroupWord::commutator(&GroupWord::generator(d, a), &GroupWord::generator(d, b))
            })
            .collect();
        Self { generators: d, relators }
    }

    /// Five generators, one relator [[x1,x2],x3][x4,x5]: the classical
    /// source of a defined non-vanishing triple Massey product.
    pub fn nested_commutator_one_relator() -> Self {
        let x = |i| GroupWord::generator(5, i);
        let inner = GroupWord::commutator(&x(0), &x(1));
        let left = GroupWord::commutator(&inner, &x(2));
        let right = GroupWord::commutator(&x(3), &x(4));
        Self { generators: 5, relators: vec![left.concat(&right)] }
    }

    /// Direct-product presentation on top of existing relators: every
    /// generator of the second factor commutes with every generator of the
    /// first. Words of the first factor keep their indices.
    pub fn extend_direct_product(&self, d2: usize) -> Self {
        let d = self.generators + d2;
        let mut relators: Vec<GroupWord> = self
            .relators
            .iter()
            .map(|w| GroupWord::from_letters(d, &w.letters))
            .collect();
        for i in 0..self.generators {
            for j in 0..d2 {
                relators.push(GroupWord::commutator(
                    &GroupWord::generator(d, i),
                    &GroupWord::generator(d, self.generators + j),
                ));
            }
        }
        Self { generators: d, relators }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepMode {
    Full,
    ModCenter,
}

/// Generator images in U_{n+1} together with the presentation they must
/// respect, either on the nose or modulo the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentRep {
    pub presentation: Presentation,
    pub images: Vec<UnipotentMatrix>,
    pub mode: RepMode,
}

impl UnipotentRep {
    /// Does every relator map to the identity (Full) or into the center
    /// (ModCenter)?
    pub fn verify(&self) -> bool {
        if self.images.len() != self.presentation.generators {
            return false;
        }
        self.presentation.relators.iter().all(|r| {
            let m = UnipotentMatrix::eval_word(&self.images, r);
            match self.mode {
                RepMode::Full => m.is_identity(),
                RepMode::ModCenter => m.is_central(),
            }
        })
    }
}

/// The explicit RAAG witness: ρ(v_i) = I + Σ_h α_h(v_i)·E_{h,h+1}. Requires
/// every consecutive cup product α_h ⌣ α_{h+1} to vanish; the offending pair
/// (h, h+1) is reported 1-based otherwise.
pub fn build_raag_witness(
    alg: &SRAlgebra,
    chars: &[Cochain],
) -> Result<UnipotentRep, MasseyError> {
    let d = alg.dim(1);
    let n = chars.len();
    assert!(n >= 2, "a Massey tuple has at least two entries");
    for (h, c) in chars.iter().enumerate() {
        if c.degree != 1 || c.coeffs.len() != d {
            return Err(MasseyError::ShapeMismatch(h, d));
        }
    }
    for h in 0..n - 1 {
        let cup = alg.wedge(&chars[h], &chars[h + 1]).expect("same algebra");
        if cup.coeffs.iter().any(|&c| c != 0) {
            return Err(MasseyError::CupObstruction(h + 1, h + 2));
        }
    }
    let p = alg.prime();
    let images = (0..d)
        .map(|v| {
            let mut m = UnipotentMatrix::identity(n + 1, p);
            for (h, c) in chars.iter().enumerate() {
                m.set(h, h + 1, c.coeffs[v]);
            }
            m
        })
        .collect();
    let rep = UnipotentRep {
        presentation: Presentation::raag(alg.graph()),
        images,
        mode: RepMode::Full,
    };
    debug_assert!(rep.verify());
    Ok(rep)
}

/// Read the characters back off the superdiagonal strips of a verified
/// representation.
pub fn extract_superdiagonal(rep: &UnipotentRep) -> Result<Vec<Vec<u32>>, MasseyError> {
    if !rep.verify() {
        return Err(MasseyError::NotAHomomorphism);
    }
    let n = rep.images.first().map_or(0, |m| m.size - 1);
    Ok((0..n)
        .map(|h| rep.images.iter().map(|m| m.get(h, h + 1)).collect())
        .collect())
}

/// Powers of one Jordan block: ρ(v_i) = J^{α(v_i)}. Powers of J commute, so
/// every RAAG relator passes and the constant tuple (α, ..., α) vanishes.
pub fn power_witness(
    alg: &SRAlgebra,
    alpha: &Cochain,
    n: usize,
) -> Result<UnipotentRep, MasseyError> {
    assert!(n >= 2);
    let d = alg.dim(1);
    if alpha.degree != 1 || alpha.coeffs.len() != d {
        return Err(MasseyError::ShapeMismatch(0, d));
    }
    let p = alg.prime();
    let j = UnipotentMatrix::jordan_block(n + 1, p);
    let images = (0..d).map(|v| j.pow(alpha.coeffs[v])).collect();
    let rep = UnipotentRep {
        presentation: Presentation::raag(alg.graph()),
        images,
        mode: RepMode::Full,
    };
    debug_assert!(rep.verify());
    Ok(rep)
}

/// Extend a verified witness over a direct product by sending the second
/// factor's generators to the identity.
pub fn product_extend_witness(rep: &UnipotentRep, d2: usize) -> UnipotentRep {
    let size = rep.images.first().map(|m| m.size).expect("nonempty representation");
    let p = rep.images[0].p;
    let mut images = rep.images.clone();
    images.extend((0..d2).map(|_| UnipotentMatrix::identity(size, p)));
    UnipotentRep {
        presentation: rep.presentation.extend_direct_product(d2),
        images,
        mode: rep.mode,
    }
}

/// Verdict of the exhaustive unipotent oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    /// A full U_{n+1} representation exists with the given superdiagonals.
    Vanishes,
    /// Only a representation modulo the center exists.
    DefinedOnly,
    /// Not even the mod-center lift exists.
    Undefined,
}

pub const DEFAULT_SEARCH_BUDGET: u128 = 1 << 26;

/// Exhaustively fill the strictly-upper entries above a fixed superdiagonal,
/// generator by generator — generators outermost, entries row-major within a
/// generator — and classify the tuple. `chars[h][g]` is the (h, h+1)-entry of
/// generator g.
pub fn exhaustive_witness_search(
    pres: &Presentation,
    p: Prime,
    n: usize,
    chars: &[Vec<u32>],
    budget: u128,
) -> Result<SearchOutcome, MasseyError> {
    assert!(n >= 2);
    if chars.len() != n || chars.iter().any(|c| c.len() != pres.generators) {
        return Err(MasseyError::ShapeMismatch(n, pres.generators));
    }
    let free_full: Vec<(usize, usize)> = (0..n + 1)
        .flat_map(|i| (i + 2..n + 1).map(move |j| (i, j)))
        .collect();
    let digits = free_full.len() * pres.generators;
    let space = (p.get() as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
    if space > budget {
        return Err(MasseyError::BudgetExceeded(space, budget));
    }
    if search(pres, p, n, chars, &free_full, RepMode::Full).is_some() {
        return Ok(SearchOutcome::Vanishes);
    }
    // modulo the center the top-right corner is invisible, so pin it to zero
    let corner = (0usize, n);
    let free_center: Vec<(usize, usize)> =
        free_full.iter().copied().filter(|&e| e != corner).collect();
    if search(pres, p, n, chars, &free_center, RepMode::ModCenter).is_some() {
        return Ok(SearchOutcome::DefinedOnly);
    }
    Ok(SearchOutcome::Undefined)
}

/// Search returning the witness itself, for callers that want to display it.
pub fn search_witness(
    pres: &Presentation,
    p: Prime,
    n: usize,
    chars: &[Vec<u32>],
    mode: RepMode,
) -> Option<UnipotentRep> {
    let corner = (0usize, n);
    let free: Vec<(usize, usize)> = (0..n + 1)
        .flat_map(|i| (i + 2..n + 1).map(move |j| (i, j)))
        .filter(|&e| mode == RepMode::Full || e != corner)
        .collect();
    search(pres, p, n, chars, &free, mode)
}

fn base_images(
    pres: &Presentation,
    p: Prime,
    n: usize,
    chars: &[Vec<u32>],
) -> Vec<UnipotentMatrix> {
    (0..pres.generators)
        .map(|g| {
            let mut m = UnipotentMatrix::identity(n + 1, p);
            for (h, c) in chars.iter().enumerate() {
                m.set(h, h + 1, c[g]);
            }
            m
        })
        .collect()
}

fn fill(
    base: &[UnipotentMatrix],
    free: &[(usize, usize)],
    p: Prime,
    mut code: u128,
) -> Vec<UnipotentMatrix> {
    // code digits: generator 0's row-major entries are most significant
    let mut images = base.to_vec();
    let pv = p.get() as u128;
    let total = free.len() * images.len();
    for slot in (0..total).rev() {
        let digit = (code % pv) as u32;
        code /= pv;
        let g = slot / free.len();
        let (i, j) = free[slot % free.len()];
        images[g].set(i, j, digit);
    }
    images
}

fn check(pres: &Presentation, images: &[UnipotentMatrix], mode: RepMode) -> bool {
    pres.relators.iter().all(|r| {
        let m = UnipotentMatrix::eval_word(images, r);
        match mode {
            RepMode::Full => m.is_identity(),
            RepMode::ModCenter => m.is_central(),
        }
    })
}

#[cfg(feature = "parallel")]
fn search(
    pres: &Presentation,
    p: Prime,
    n: usize,
    chars: &[Vec<u32>],
    free: &[(usize, usize)],
    mode: RepMode,
) -> Option<UnipotentRep> {
    use rayon::prelude::*;
    let base = base_images(pres, p, n, chars);
    let digits = free.len() * pres.generators;
    let pv = p.get() as u128;
    let space = pv.pow(digits as u32);
    // parallel over the outermost generator's fillings
    let outer = pv.pow(free.len() as u32);
    let inner = space / outer;
    (0..outer)
        .into_par_iter()
        .find_map_first(|hi| {
            (0..inner).find_map(|lo| {
                let images = fill(&base, free, p, hi * inner + lo);
                check(pres, &images, mode).then_some(images)
            })
        })
        .map(|images| UnipotentRep { presentation: pres.clone(), images, mode })
}

#[cfg(not(feature = "parallel"))]
fn search(
    pres: &Presentation,
    p: Prime,
    n: usize,
    chars: &[Vec<u32>],
    free: &[(usize, usize)],
    mode: RepMode,
) -> Option<UnipotentRep> {
    let base = base_images(pres, p, n, chars);
    let digits = free.len() * pres.generators;
    let pv = p.get() as u128;
    let space = pv.pow(digits as u32);
    (0..space)
        .find_map(|code| {
            let images = fill(&base, free, p, code);
            check(pres, &images, mode).then_some(images)
        })
        .map(|images| UnipotentRep { presentation: pres.clone(), images, mode })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    fn enumerate_group(size: usize, pr: Prime) -> Vec<UnipotentMatrix> {
        let m = pair_count(size);
        let pv = pr.get() as u64;
        let total = pv.pow(m as u32);
        (0..total)
            .map(|mut code| {
                let mut mat = UnipotentMatrix::identity(size, pr);
                for k in 0..m {
                    mat.entries[k] = (code % pv) as u32;
                    code /= pv;
                }
                mat
            })
            .collect()
    }

    #[test]
    fn group_order_and_axioms_small() {
        for (n, pv) in [(2usize, 2u32), (2, 3), (3, 2), (3, 3)] {
            let pr = p(pv);
            let all = enumerate_group(n + 1, pr);
            assert_eq!(all.len() as u64, (pv as u64).pow((n * (n + 1) / 2) as u32));
            // closure and inverses on a sample to keep it quick
            let step = (all.len() / 16).max(1);
            for a in all.iter().step_by(step) {
                assert!(a.mul(&a.inverse()).is_identity());
                for b in all.iter().step_by(step) {
                    let c = a.mul(b);
                    assert_eq!(c.p, pr);
                    // associativity spot check with a fixed third element
                    let j = UnipotentMatrix::jordan_block(n + 1, pr);
                    assert_eq!(a.mul(&b.mul(&j)), c.mul(&j));
                }
            }
        }
    }

    #[test]
    fn center_detection() {
        let pr = p(3);
        let mut z = UnipotentMatrix::identity(4, pr);
        z.set(0, 3, 2);
        assert!(z.is_central());
        assert!(!z.is_identity());
        let mut nz = UnipotentMatrix::identity(4, pr);
        nz.set(1, 3, 1);
        assert!(!nz.is_central());
    }

    #[test]
    fn verify_rep_examples() {
        let pr = p(2);
        let g = SimplicialGraph::new(2, &[(0, 1)]).unwrap();
        let pres = Presentation::raag(&g);
        let id_rep = UnipotentRep {
            presentation: pres.clone(),
            images: vec![UnipotentMatrix::identity(3, pr); 2],
            mode: RepMode::Full,
        };
        assert!(id_rep.verify());

        // non-commuting pair in U_3(F_2) fails the edge relator
        let mut a = UnipotentMatrix::identity(3, pr);
        a.set(0, 1, 1);
        let mut b = UnipotentMatrix::identity(3, pr);
        b.set(1, 2, 1);
        assert_ne!(a.mul(&b), b.mul(&a));
        let bad = UnipotentRep { presentation: pres, images: vec![a, b], mode: RepMode::Full };
        assert!(!bad.verify());
    }

    #[test]
    fn witness_zero_and_edgeless() {
        let pr = p(3);
        let g = SimplicialGraph::new(2, &[(0, 1)]).unwrap();
        let alg = SRAlgebra::new(g, pr);
        let zeros = vec![alg.zero(1); 3];
        let rep = build_raag_witness(&alg, &zeros).unwrap();
        assert!(rep.images.iter().all(|m| m.is_identity()));

        // no edges: Λ_2 = 0 kills every obstruction
        let free = SRAlgebra::new(SimplicialGraph::new(2, &[]).unwrap(), pr);
        let chars = vec![free.character(0), free.character(1), free.character(0)];
        let rep = build_raag_witness(&free, &chars).unwrap();
        assert!(rep.verify());
    }

    #[test]
    fn witness_obstruction() {
        let pr = p(2);
        let alg = SRAlgebra::new(SimplicialGraph::new(2, &[(0, 1)]).unwrap(), pr);
        let chars = vec![alg.character(0), alg.character(1), alg.character(0)];
        assert_eq!(
            build_raag_witness(&alg, &chars),
            Err(MasseyError::CupObstruction(1, 2))
        );
    }

    #[test]
    fn superdiagonal_round_trip() {
        let pr = p(5);
        let alg = SRAlgebra::new(crate::graph::example_graph(), pr);
        // multiples of one character always have vanishing consecutive cups
        let base = alg.character_from(&[1, 2, 0, 4, 3]);
        let chars: Vec<Cochain> =
            [1i64, 3, 2].iter().map(|&s| alg.scale(&base, s)).collect();
        let rep = build_raag_witness(&alg, &chars).unwrap();
        let got = extract_superdiagonal(&rep).unwrap();
        for (h, c) in chars.iter().enumerate() {
            assert_eq!(got[h], c.coeffs);
        }
    }

    #[test]
    fn power_witness_examples() {
        let pr = p(3);
        let alg = SRAlgebra::new(crate::graph::example_graph(), pr);
        let zero = alg.zero(1);
        let rep = power_witness(&alg, &zero, 3).unwrap();
        assert!(rep.images.iter().all(|m| m.is_identity()));

        let alpha = alg.character(0);
        let rep = power_witness(&alg, &alpha, 3).unwrap();
        assert!(rep.verify());
        assert_eq!(rep.images[0], UnipotentMatrix::jordan_block(4, pr));
        assert!(rep.images[1..].iter().all(|m| m.is_identity()));
        // constant superdiagonal tuple
        let sd = extract_superdiagonal(&rep).unwrap();
        for strip in &sd {
            assert_eq!(strip, &alpha.coeffs);
        }

        // p-cyclic shape: n = p with a full-support character
        let alpha = alg.character_from(&[1, 2, 1, 0, 2]);
        let rep = power_witness(&alg, &alpha, pr.get() as usize).unwrap();
        assert!(rep.verify());
    }

    #[test]
    fn product_extension() {
        let pr = p(2);
        let alg = SRAlgebra::new(SimplicialGraph::complete(2), pr);
        let base = alg.character_from(&[1, 1]);
        let chars: Vec<Cochain> = vec![base.clone(), base.clone(), base];
        let rep = build_raag_witness(&alg, &chars).unwrap();
        let ext = product_extend_witness(&rep, 3);
        assert!(ext.verify());
        let sd = extract_superdiagonal(&ext).unwrap();
        for strip in &sd {
            assert_eq!(&strip[2..], &[0, 0, 0]);
        }
    }

    #[test]
    fn search_agrees_with_construction_tiny() {
        let pr = p(2);
        let g = SimplicialGraph::new(2, &[(0, 1)]).unwrap();
        let alg = SRAlgebra::new(g.clone(), pr);
        let pres = Presentation::raag(&g);
        // vanishing tuple: both characters equal
        let a = alg.character(0);
        let chars = vec![a.coeffs.clone(), a.coeffs.clone(), a.coeffs.clone()];
        assert_eq!(
            exhaustive_witness_search(&pres, pr, 3, &chars, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::Vanishes
        );
        // obstructed tuple: consecutive cup nonzero
        let b = alg.character(1);
        let chars = vec![a.coeffs.clone(), b.coeffs.clone(), a.coeffs.clone()];
        assert_eq!(
            exhaustive_witness_search(&pres, pr, 3, &chars, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::Undefined
        );
    }

    #[test]
    fn search_witness_returns_usable_rep() {
        let pr = p(2);
        let g = SimplicialGraph::new(2, &[(0, 1)]).unwrap();
        let pres = Presentation::raag(&g);
        let chars = vec![vec![1, 0], vec![1, 0], vec![1, 0]];
        let rep = search_witness(&pres, pr, 3, &chars, RepMode::Full).expect("witness exists");
        assert!(rep.verify());
        let sd = extract_superdiagonal(&rep).unwrap();
        assert_eq!(sd, chars);
        // obstructed superdiagonal: not even a mod-center lift
        let chars = vec![vec![1, 0], vec![0, 1], vec![1, 0]];
        assert!(search_witness(&pres, pr, 3, &chars, RepMode::ModCenter).is_none());
    }

    #[test]
    fn budget_guard() {
        let pres = Presentation::raag(&SimplicialGraph::complete(4));
        let chars = vec![vec![0u32; 4]; 3];
        let tiny = 8u128;
        match exhaustive_witness_search(&pres, p(2), 3, &chars, tiny) {
            Err(MasseyError::BudgetExceeded(space, budget)) => {
                assert!(space > budget);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn scaling_preserves_witness() {
        // if a tuple admits a witness, so does the tuple with one character
        // scaled: the edge conditions are bilinear
        let pr = p(5);
        let alg = SRAlgebra::new(crate::graph::example_graph(), pr);
        let base = alg.character_from(&[1, 0, 2, 0, 1]);
        let chars = vec![base.clone(), alg.scale(&base, 2), alg.scale(&base, 3)];
        let rep = build_raag_witness(&alg, &chars).unwrap();
        assert!(rep.verify());
        for scale in 0..5i64 {
            let mut scaled = chars.clone();
            scaled[1] = alg.scale(&chars[1], scale);
            let rep = build_raag_witness(&alg, &scaled).unwrap();
            assert!(rep.verify());
        }
    }
}

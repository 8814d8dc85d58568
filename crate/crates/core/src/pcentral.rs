//! The free pro-p group on d generators modulo the third term of its
//! descending p-central series: normal forms x_1^{e_1}···x_d^{e_d}·∏[x_i,x_j]^{c_ij}
//! with exponents mod p² and commutator coordinates mod p. Commutators and
//! p-th powers are central here, which makes collection a closed-form
//! bookkeeping exercise. The commutator convention is [g,h] = g h g⁻¹ h⁻¹.

use crate::fp::{FpMatrix, Prime};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PcError {
    #[error("operands have different generator counts or primes")]
    ParameterMismatch,
    #[error("no image provided for generator {0}")]
    MissingImage(usize),
    #[error("relation {0} does not lie in the Frattini quotient: exponent of generator {1} is not divisible by p")]
    NotInFrattiniQuotient(usize, usize),
}

/// A word in free generators, letters are (generator index, ±1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupWord {
    pub gens: usize,
    pub letters: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn identity(gens: usize) -> Self {
        Self { gens, letters: Vec::new() }
    }

    pub fn generator(gens: usize, i: usize) -> Self {
        assert!(i < gens);
        Self { gens, letters: vec![(i, 1)] }
    }

    pub fn from_letters(gens: usize, letters: &[(usize, i8)]) -> Self {
        assert!(letters.iter().all(|&(g, s)| g < gens && (s == 1 || s == -1)));
        Self { gens, letters: letters.to_vec() }
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect();
        Self { gens: self.gens, letters }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.gens, other.gens);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { gens: self.gens, letters }
    }

    /// [u, v] = u v u⁻¹ v⁻¹.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Self { gens: self.gens, letters }
    }
}

/// Normal form of an element of F/F^(3): generator exponents mod p² and
/// commutator coordinates mod p indexed by pairs i < j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTwoWord {
    pub gens: usize,
    pub p: Prime,
    /// exponents mod p²
    pub exp: Vec<u32>,
    /// commutator coordinates mod p, pair (i, j) with i < j at `pair_index`
    pub comm: Vec<u32>,
}

pub fn pair_index(gens: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < gens);
    i * gens - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_count(gens: usize) -> usize {
    gens * (gens - 1) / 2
}

impl ClassTwoWord {
    pub fn identity(gens: usize, p: Prime) -> Self {
        Self { gens, p, exp: vec![0; gens], comm: vec![0; pair_count(gens)] }
    }

    pub fn generator(gens: usize, p: Prime, i: usize, sign: i8) -> Self {
        let mut w = Self::identity(gens, p);
        let psq = p.get() * p.get();
        w.exp[i] = if sign >= 0 { 1 } else { psq - 1 };
        w
    }

    pub fn is_identity(&self) -> bool {
        self.exp.iter().all(|&e| e == 0) && self.comm.iter().all(|&c| c == 0)
    }

    pub fn comm_at(&self, i: usize, j: usize) -> u32 {
        self.comm[pair_index(self.gens, i, j)]
    }

    fn compatible(&self, other: &Self) -> Result<(), PcError> {
        if self.gens != other.gens || self.p != other.p {
            return Err(PcError::ParameterMismatch);
        }
        Ok(())
    }

    /// Collection product. Moving the right factor's generators past the
    /// left factor's costs one [x_i, x_j]⁻¹ per crossed pair.
    pub fn mul(&self, other: &Self) -> Result<Self, PcError> {
        self.compatible(other)?;
        let p = self.p.get();
        let psq = p * p;
        let exp: Vec<u32> =
            self.exp.iter().zip(&other.exp).map(|(&a, &b)| (a + b) % psq).collect();
        let mut comm = vec![0u32; pair_count(self.gens)];
        for i in 0..self.gens {
            for j in (i + 1)..self.gens {
                let k = pair_index(self.gens, i, j);
                let cross = self.p.mul(self.exp[j] % p, other.exp[i] % p);
                comm[k] = self.p.sub(self.p.add(self.comm[k], other.comm[k]), cross);
            }
        }
        Ok(Self { gens: self.gens, p: self.p, exp, comm })
    }

    pub fn inv(&self) -> Self {
        let p = self.p.get();
        let psq = p * p;
        let exp: Vec<u32> = self.exp.iter().map(|&a| (psq - a % psq) % psq).collect();
        let mut comm = vec![0u32; pair_count(self.gens)];
        for i in 0..self.gens {
            for j in (i + 1)..self.gens {
                let k = pair_index(self.gens, i, j);
                let cross = self.p.mul(self.exp[i] % p, self.exp[j] % p);
                comm[k] = self.p.neg(self.p.add(self.comm[k], cross));
            }
        }
        Self { gens: self.gens, p: self.p, exp, comm }
    }

    /// [a, b] mod F^(3): the e-part vanishes and the commutator coordinates
    /// are the antisymmetrized product of the exponent vectors.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self, PcError> {
        a.compatible(b)?;
        let p = a.p.get();
        let mut out = Self::identity(a.gens, a.p);
        for i in 0..a.gens {
            for j in (i + 1)..a.gens {
                let k = pair_index(a.gens, i, j);
                let lhs = a.p.mul(a.exp[i] % p, b.exp[j] % p);
                let rhs = a.p.mul(a.exp[j] % p, b.exp[i] % p);
                out.comm[k] = a.p.sub(lhs, rhs);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::identity(self.gens, self.p);
        for _ in 0..n {
            acc = acc.mul(self).unwrap();
        }
        acc
    }
}

/// Collect a word into its class-2 normal form. Multiplicative:
/// nf(uv) = nf(u)·nf(v).
pub fn nf_from_word(w: &GroupWord, p: Prime) -> ClassTwoWord {
    let mut acc = ClassTwoWord::identity(w.gens, p);
    for &(g, s) in &w.letters {
        let letter = ClassTwoWord::generator(w.gens, p, g, s);
        acc = acc.mul(&letter).unwrap();
    }
    acc
}

/// Substitute generator images into a word and collect over the target
/// alphabet. All images must share the same generator count.
pub fn substitute_hom(
    images: &[GroupWord],
    w: &GroupWord,
    p: Prime,
) -> Result<ClassTwoWord, PcError> {
    let target = images.first().map(|im| im.gens).unwrap_or(0);
    if images.iter().any(|im| im.gens != target) {
        return Err(PcError::ParameterMismatch);
    }
    let mut substituted = GroupWord::identity(target);
    for &(g, s) in &w.letters {
        let image = images.get(g).ok_or(PcError::MissingImage(g))?;
        let piece = if s >= 0 { image.clone() } else { image.inverse() };
        substituted = substituted.concat(&piece);
    }
    Ok(nf_from_word(&substituted, p))
}

/// Outcome of the independence test on a set of Frattini-quotient relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub independent: bool,
    pub rank: usize,
    /// row-reduced coordinate matrix over the basis {x_i^p} ∪ {[x_i,x_j]}
    pub reduced: FpMatrix,
}

/// Stack each relation's Φ(F)/F^(3) coordinate vector into a matrix and row
/// reduce. Full row rank certifies that the induced degree-2 classes are
/// linearly independent; the rank is a lower bound in general.
pub fn relations_independent(rels: &[ClassTwoWord]) -> Result<IndependenceReport, PcError> {
    let Some(first) = rels.first() else {
        let p = Prime::new(2).unwrap();
        return Ok(IndependenceReport { independent: true, rank: 0, reduced: FpMatrix::zeros(p, 0, 0) });
    };
    let gens = first.gens;
    let p = first.p;
    let cols = gens + pair_count(gens);
    let mut m = FpMatrix::zeros(p, rels.len(), cols);
    for (ri, rel) in rels.iter().enumerate() {
        if rel.gens != gens || rel.p != p {
            return Err(PcError::ParameterMismatch);
        }
        for (i, &e) in rel.exp.iter().enumerate() {
            if e % p.get() != 0 {
                return Err(PcError::NotInFrattiniQuotient(ri, i));
            }
            m[(ri, i)] = (e / p.get()) % p.get();
        }
        for (k, &c) in rel.comm.iter().enumerate() {
            m[(ri, gens + k)] = c;
        }
    }
    let rank = m.rank();
    let (reduced, _) = m.rref();
    Ok(IndependenceReport { independent: rank == rels.len(), rank, reduced })
}

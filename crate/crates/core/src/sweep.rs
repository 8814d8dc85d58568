//! The quantified sweeps behind the acceptance suite, exposed as library
//! functions so the benches can time them. Every sweep has a `_seq` twin
//! running on one thread; the unsuffixed entry parallelizes when the
//! `parallel` feature (default) is on.

use crate::cert::{exactness_ledger, SubsetPolicy};
use crate::enumerate::{chordal_representatives_up_to, graph_count, graph_from_mask};
use crate::exec::map_mode;
use crate::fp::Prime;
use crate::graph::{subsquare_census, SimplicialGraph};
use crate::massey::{
    build_raag_witness, exhaustive_witness_search, extract_superdiagonal, Presentation,
    SearchOutcome,
};
use crate::sr::{Cochain, SRAlgebra};
use rand::{Rng, SeedableRng};

/// Outcome of a sweep: how many cases ran and which ones failed.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(parts: Vec<SweepReport>) -> SweepReport {
        let mut out = SweepReport::default();
        for p in parts {
            out.checked += p.checked;
            out.violations.extend(p.violations);
        }
        out
    }
}

fn primes(ps: &[u32]) -> Vec<Prime> {
    ps.iter().map(|&p| Prime::new(p).unwrap()).collect()
}

// ---------------------------------------------------------------------------
// cup rank on the all-ones character over connected graphs
// ---------------------------------------------------------------------------

fn cup_rank_connected_impl(dmax: usize, ps: &[u32], sequential: bool) -> SweepReport {
    let ps = primes(ps);
    let mut parts = Vec::new();
    for d in 1..=dmax {
        let masks: Vec<u64> = (0..graph_count(d)).collect();
        let reports = map_mode(sequential, &masks, |&mask| {
            let g = graph_from_mask(d, mask);
            let mut rep = SweepReport::default();
            if g.component_count() != 1 {
                return rep;
            }
            let all: Vec<usize> = (0..d).collect();
            for &p in &ps {
                let alg = SRAlgebra::new(g.clone(), p);
                let alpha = alg.support_character(&all);
                let rank = alg.cup_matrix(&alpha).rank();
                rep.checked += 1;
                if rank != d - 1 {
                    rep.violations.push(format!(
                        "connected d={d} mask={mask} p={}: rank {rank} != {}",
                        p.get(),
                        d - 1
                    ));
                }
            }
            rep
        });
        parts.push(SweepReport::merge(reports));
    }
    SweepReport::merge(parts)
}

pub fn cup_rank_connected_sweep(dmax: usize, ps: &[u32]) -> SweepReport {
    cup_rank_connected_impl(dmax, ps, false)
}

pub fn cup_rank_connected_sweep_seq(dmax: usize, ps: &[u32]) -> SweepReport {
    cup_rank_connected_impl(dmax, ps, true)
}

// ---------------------------------------------------------------------------
// cup dimension formula against the rank oracle, all graphs, all supports
// ---------------------------------------------------------------------------

fn cup_formula_impl(dmax: usize, ps: &[u32], sequential: bool) -> SweepReport {
    let ps = primes(ps);
    let mut parts = Vec::new();
    for d in 1..=dmax {
        let masks: Vec<u64> = (0..graph_count(d)).collect();
        let reports = map_mode(sequential, &masks, |&mask| {
            let g = graph_from_mask(d, mask);
            let mut rep = SweepReport::default();
            for &p in &ps {
                let alg = SRAlgebra::new(g.clone(), p);
                for smask in 1u64..(1 << d) {
                    let support: Vec<usize> =
                        (0..d).filter(|&v| smask >> v & 1 == 1).collect();
                    let formula = alg.cup_image_dim_formula(&support).unwrap();
                    let alpha = alg.support_character(&support);
                    let rank = alg.cup_matrix(&alpha).rank();
                    rep.checked += 1;
                    if formula != rank {
                        rep.violations.push(format!(
                            "d={d} mask={mask} p={} support={support:?}: formula {formula} != rank {rank}",
                            p.get()
                        ));
                    }
                }
            }
            rep
        });
        parts.push(SweepReport::merge(reports));
    }
    SweepReport::merge(parts)
}

pub fn cup_formula_sweep(dmax: usize, ps: &[u32]) -> SweepReport {
    cup_formula_impl(dmax, ps, false)
}

pub fn cup_formula_sweep_seq(dmax: usize, ps: &[u32]) -> SweepReport {
    cup_formula_impl(dmax, ps, true)
}

// ---------------------------------------------------------------------------
// subsquare census identity over induced subgraphs of ladders
// ---------------------------------------------------------------------------

fn ladder_census_impl(nmax: usize, sequential: bool) -> SweepReport {
    let mut parts = Vec::new();
    for n in 1..=nmax {
        let ladder = SimplicialGraph::ladder(n);
        let d = ladder.vertex_count();
        let masks: Vec<u64> = (0..(1u64 << d)).collect();
        let reports = map_mode(sequential, &masks, |&mask| {
            let verts: Vec<usize> = (0..d).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = ladder.induced(&verts);
            let (q, ok) = subsquare_census(&sub);
            SweepReport {
                checked: 1,
                violations: if ok {
                    Vec::new()
                } else {
                    vec![format!("Q_{n} subset {verts:?}: census {q} misses the identity")]
                },
            }
        });
        parts.push(SweepReport::merge(reports));
    }
    SweepReport::merge(parts)
}

pub fn ladder_census_sweep(nmax: usize) -> SweepReport {
    ladder_census_impl(nmax, false)
}

pub fn ladder_census_sweep_seq(nmax: usize) -> SweepReport {
    ladder_census_impl(nmax, true)
}

// ---------------------------------------------------------------------------
// exactness ledgers across every chordal graph and ladder
// ---------------------------------------------------------------------------

fn ledger_report(g: &SimplicialGraph, p: Prime, with_certificates: bool, tag: &str) -> SweepReport {
    match exactness_ledger(g, p, SubsetPolicy::AllSubsets, with_certificates) {
        Ok(ledger) => SweepReport {
            checked: ledger.rows.len(),
            violations: ledger
                .rows
                .iter()
                .filter(|r| !r.pass)
                .map(|r| {
                    format!(
                        "{tag} p={} support={:?}: total {} != {} (cup {}/{} cert {:?})",
                        p.get(),
                        r.support,
                        r.total,
                        r.target,
                        r.dim_cup_formula,
                        r.dim_cup_rank,
                        r.certificate
                    )
                })
                .collect(),
        },
        Err(e) => SweepReport { checked: 0, violations: vec![format!("{tag}: {e}")] },
    }
}

fn chordal_ledger_impl(
    dmax: usize,
    ps: &[u32],
    with_certificates: bool,
    sequential: bool,
) -> SweepReport {
    let ps = primes(ps);
    let reps = chordal_representatives_up_to(dmax);
    let work: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|g| (0..ps.len()).map(move |p| (g, p)))
        .collect();
    let reports = map_mode(sequential, &work, |&(gi, pi)| {
        ledger_report(
            &reps[gi],
            ps[pi],
            with_certificates,
            &format!("chordal rep {gi} (d={})", reps[gi].vertex_count()),
        )
    });
    SweepReport::merge(reports)
}

pub fn chordal_ledger_sweep(dmax: usize, ps: &[u32], with_certificates: bool) -> SweepReport {
    chordal_ledger_impl(dmax, ps, with_certificates, false)
}

pub fn chordal_ledger_sweep_seq(dmax: usize, ps: &[u32], with_certificates: bool) -> SweepReport {
    chordal_ledger_impl(dmax, ps, with_certificates, true)
}

fn ladder_ledger_impl(nmax: usize, ps: &[u32], sequential: bool) -> SweepReport {
    let ps = primes(ps);
    let work: Vec<(usize, usize)> = (1..=nmax)
        .flat_map(|n| (0..ps.len()).map(move |p| (n, p)))
        .collect();
    let reports = map_mode(sequential, &work, |&(n, pi)| {
        let g = SimplicialGraph::ladder(n);
        ledger_report(&g, ps[pi], true, &format!("ladder Q_{n}"))
    });
    SweepReport::merge(reports)
}

pub fn ladder_ledger_sweep(nmax: usize, ps: &[u32]) -> SweepReport {
    ladder_ledger_impl(nmax, ps, false)
}

pub fn ladder_ledger_sweep_seq(nmax: usize, ps: &[u32]) -> SweepReport {
    ladder_ledger_impl(nmax, ps, true)
}

// ---------------------------------------------------------------------------
// RAAG witness round trips on random admissible tuples
// ---------------------------------------------------------------------------

/// Draw a tuple with every consecutive cup product zero: each character is
/// sampled uniformly from the kernel of cup-by-the-previous-one.
fn admissible_tuple(alg: &SRAlgebra, n: usize, rng: &mut impl Rng) -> Vec<Cochain> {
    let d = alg.dim(1);
    let p = alg.prime();
    let mut chars: Vec<Cochain> = Vec::with_capacity(n);
    let first: Vec<i64> = (0..d).map(|_| rng.gen_range(0..p.get()) as i64).collect();
    chars.push(alg.character_from(&first));
    for h in 1..n {
        let prev = &chars[h - 1];
        let kernel = alg.cup_matrix(prev).rank_kernel_image().kernel;
        let mut coeffs = vec![0u32; d];
        for basis_vec in &kernel {
            let c = rng.gen_range(0..p.get());
            for (i, &x) in basis_vec.iter().enumerate() {
                coeffs[i] = p.add(coeffs[i], p.mul(c, x));
            }
        }
        chars.push(Cochain { degree: 1, coeffs });
    }
    chars
}

fn witness_roundtrip_impl(
    dmax: usize,
    ps: &[u32],
    ns: &[usize],
    tuples_per_case: usize,
    sequential: bool,
) -> SweepReport {
    let ps = primes(ps);
    let mut parts = Vec::new();
    for d in 1..=dmax {
        let masks: Vec<u64> = (0..graph_count(d)).collect();
        let reports = map_mode(sequential, &masks, |&mask| {
            let g = graph_from_mask(d, mask);
            let mut rep = SweepReport::default();
            for &p in &ps {
                let alg = SRAlgebra::new(g.clone(), p);
                for &n in ns {
                    let seed = mask ^ ((p.get() as u64) << 32) ^ ((n as u64) << 48);
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                    for t in 0..tuples_per_case {
                        let chars = admissible_tuple(&alg, n, &mut rng);
                        rep.checked += 1;
                        match build_raag_witness(&alg, &chars) {
                            Ok(witness) => {
                                if !witness.verify() {
                                    rep.violations.push(format!(
                                        "d={d} mask={mask} p={} n={n} tuple {t}: witness fails verify",
                                        p.get()
                                    ));
                                    continue;
                                }
                                let got = extract_superdiagonal(&witness).unwrap();
                                let want: Vec<Vec<u32>> =
                                    chars.iter().map(|c| c.coeffs.clone()).collect();
                                if got != want {
                                    rep.violations.push(format!(
                                        "d={d} mask={mask} p={} n={n} tuple {t}: round trip mismatch",
                                        p.get()
                                    ));
                                }
                            }
                            Err(e) => rep.violations.push(format!(
                                "d={d} mask={mask} p={} n={n} tuple {t}: admissible tuple rejected: {e}",
                                p.get()
                            )),
                        }
                    }
                }
            }
            rep
        });
        parts.push(SweepReport::merge(reports));
    }
    SweepReport::merge(parts)
}

pub fn witness_roundtrip_sweep(
    dmax: usize,
    ps: &[u32],
    ns: &[usize],
    tuples_per_case: usize,
) -> SweepReport {
    witness_roundtrip_impl(dmax, ps, ns, tuples_per_case, false)
}

pub fn witness_roundtrip_sweep_seq(
    dmax: usize,
    ps: &[u32],
    ns: &[usize],
    tuples_per_case: usize,
) -> SweepReport {
    witness_roundtrip_impl(dmax, ps, ns, tuples_per_case, true)
}

// ---------------------------------------------------------------------------
// exhaustive search against the constructive path
// ---------------------------------------------------------------------------

/// On graphs with at most `dmax` vertices at p = 2, n = 3: the search must
/// say Vanishes exactly when the construction succeeds, and Undefined
/// whenever some consecutive cup product is nonzero.
fn search_agreement_impl(dmax: usize, sequential: bool) -> SweepReport {
    let p = Prime::new(2).unwrap();
    let n = 3;
    let mut parts = Vec::new();
    for d in 1..=dmax {
        let masks: Vec<u64> = (0..graph_count(d)).collect();
        let reports = map_mode(sequential, &masks, |&mask| {
            let g = graph_from_mask(d, mask);
            let alg = SRAlgebra::new(g.clone(), p);
            let pres = Presentation::raag(&g);
            let mut rep = SweepReport::default();
            let chars_space = 1u64 << d;
            for code in 0..chars_space.pow(n as u32) {
                let tuple: Vec<Vec<u32>> = (0..n)
                    .map(|h| {
                        let sub = (code >> (h * d)) & (chars_space - 1);
                        (0..d).map(|v| (sub >> v & 1) as u32).collect()
                    })
                    .collect();
                let cochains: Vec<Cochain> = tuple
                    .iter()
                    .map(|c| Cochain { degree: 1, coeffs: c.clone() })
                    .collect();
                let cups_vanish = (0..n - 1).all(|h| {
                    alg.wedge(&cochains[h], &cochains[h + 1])
                        .unwrap()
                        .coeffs
                        .iter()
                        .all(|&x| x == 0)
                });
                let outcome =
                    exhaustive_witness_search(&pres, p, n, &tuple, 1 << 26).unwrap();
                rep.checked += 1;
                let agrees = if cups_vanish {
                    outcome == SearchOutcome::Vanishes
                } else {
                    outcome == SearchOutcome::Undefined
                };
                if !agrees {
                    rep.violations.push(format!(
                        "d={d} mask={mask} tuple code {code}: cups_vanish={cups_vanish} but search said {outcome:?}"
                    ));
                }
            }
            rep
        });
        parts.push(SweepReport::merge(reports));
    }
    SweepReport::merge(parts)
}

pub fn search_agreement_sweep(dmax: usize) -> SweepReport {
    search_agreement_impl(dmax, false)
}

pub fn search_agreement_sweep_seq(dmax: usize) -> SweepReport {
    search_agreement_impl(dmax, true)
}

// ---------------------------------------------------------------------------
// the defined-but-not-vanishing triple of the one-relator counterexample
// ---------------------------------------------------------------------------

/// Scan character triples of the five-generator one-relator group at p = 2,
/// n = 3 in lexicographic order and return the first one whose triple Massey
/// product is defined but does not vanish, with how many triples were
/// examined on the way.
pub fn find_defined_only_triple() -> Option<(Vec<Vec<u32>>, usize)> {
    let pres = Presentation::nested_commutator_one_relator();
    let p = Prime::new(2).unwrap();
    let d = pres.generators;
    let total: u64 = 1 << (3 * d);
    let decode = |code: u64| -> Vec<Vec<u32>> {
        (0..3)
            .map(|h| {
                let sub = (code >> (h * d)) & ((1 << d) - 1);
                (0..d).map(|v| (sub >> v & 1) as u32).collect()
            })
            .collect()
    };
    let classify = |code: u64| -> Option<Vec<Vec<u32>>> {
        let tuple = decode(code);
        let outcome = exhaustive_witness_search(&pres, p, 3, &tuple, 1 << 15).unwrap();
        (outcome == SearchOutcome::DefinedOnly).then_some(tuple)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..total)
            .into_par_iter()
            .find_map_first(|code| classify(code).map(|t| (t, code as usize + 1)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..total).find_map(|code| classify(code).map(|t| (t, code as usize + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        assert!(cup_rank_connected_sweep(4, &[2, 3]).ok());
        assert!(cup_formula_sweep(4, &[2, 3]).ok());
        assert!(ladder_census_sweep(2).ok());
        assert!(chordal_ledger_sweep(5, &[2], true).ok());
        assert!(ladder_ledger_sweep(2, &[2]).ok());
        assert!(witness_roundtrip_sweep(3, &[2, 3], &[3], 5).ok());
        assert!(search_agreement_sweep(2).ok());
    }

    #[test]
    fn seq_and_parallel_agree() {
        let a = cup_formula_sweep(3, &[2, 3]);
        let b = cup_formula_sweep_seq(3, &[2, 3]);
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.ok(), b.ok());
    }

    #[test]
    fn admissible_tuples_really_are() {
        let p = Prime::new(3).unwrap();
        let alg = SRAlgebra::new(crate::graph::example_graph(), p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let chars = admissible_tuple(&alg, 4, &mut rng);
            for h in 0..3 {
                let cup = alg.wedge(&chars[h], &chars[h + 1]).unwrap();
                assert!(cup.coeffs.iter().all(|&x| x == 0));
            }
        }
    }
}

//! Deterministic, seedable instance families: the tight example families,
//! round blow-ups, random tournaments, and filtered random digraphs.
//!
//! Identical parameters and seed always produce the identical digraph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::structure::{classify, is_round_labelling, twin_report};

/// Rejection filter for [`random_digraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomFilter {
    Any,
    Connected,
    Strong,
    QuasiTwinFree,
    StrongQuasiTwinFree,
    /// Twin-free but with at least one quasi-twin pair.
    TwinFreeWithQuasiTwins,
}

impl RandomFilter {
    fn accepts(&self, d: &Digraph) -> bool {
        match self {
            RandomFilter::Any => true,
            RandomFilter::Connected => d.is_connected(),
            RandomFilter::Strong => d.is_strong(),
            RandomFilter::QuasiTwinFree => twin_report(d).quasi_twin_free(),
            RandomFilter::StrongQuasiTwinFree => {
                d.is_strong() && twin_report(d).quasi_twin_free()
            }
            RandomFilter::TwinFreeWithQuasiTwins => {
                let rep = twin_report(d);
                rep.twin_free() && !rep.quasi_twins.is_empty()
            }
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RandomFilter::Any => "none",
            RandomFilter::Connected => "connected",
            RandomFilter::Strong => "strong",
            RandomFilter::QuasiTwinFree => "quasi-twin-free",
            RandomFilter::StrongQuasiTwinFree => "strong-quasi-twin-free",
            RandomFilter::TwinFreeWithQuasiTwins => "twin-free-with-quasi-twins",
        }
    }
}

/// A blow-up instance together with the blocks that generated it, so
/// decomposition recovery can be checked exactly.
#[derive(Debug, Clone)]
pub struct BlowupInstance {
    pub digraph: Digraph,
    pub quotient: Digraph,
    /// Vertex ids of each block, in quotient order.
    pub blocks: Vec<Vec<usize>>,
    pub strong: bool,
}

/// Two apex vertices and `k` disjoint directed triangles: the bottom apex
/// feeds the top apex, the top apex feeds every triangle vertex, and every
/// triangle vertex feeds the bottom apex. Strongly connected, twin-free and
/// quasi-twin-free, with location-domination number `2(n−2)/3`.
pub fn apex_triangles(k: usize) -> Result<Digraph> {
    if k < 1 {
        return Err(Error::Input("apex-triangles needs k ≥ 1".into()));
    }
    let n = 3 * k + 2;
    let (bottom, top) = (0, 1);
    let mut arcs = vec![(bottom, top)];
    for j in 0..k {
        let base = 2 + 3 * j;
        arcs.push((base, base + 1));
        arcs.push((base + 1, base + 2));
        arcs.push((base + 2, base));
        for v in base..base + 3 {
            arcs.push((top, v));
            arcs.push((v, bottom));
        }
    }
    let d = Digraph::new(n, &arcs)?;
    debug_assert!(d.is_strong());
    debug_assert!(twin_report(&d).quasi_twin_free());
    Ok(d)
}

/// A hub vertex whose out-neighbourhood consists of `k` disjoint directed
/// triangles. Locally in-semicomplete and quasi-twin-free, with
/// location-domination number `2k` on `3k+1` vertices.
pub fn hub_triangles(k: usize) -> Result<Digraph> {
    if k < 1 {
        return Err(Error::Input("hub-triangles needs k ≥ 1".into()));
    }
    let n = 3 * k + 1;
    let hub = 0;
    let mut arcs = Vec::new();
    for j in 0..k {
        let base = 1 + 3 * j;
        arcs.push((base, base + 1));
        arcs.push((base + 1, base + 2));
        arcs.push((base + 2, base));
        for v in base..base + 3 {
            arcs.push((hub, v));
        }
    }
    let d = Digraph::new(n, &arcs)?;
    debug_assert!(classify(&d).locally_in_semicomplete);
    debug_assert!(twin_report(&d).quasi_twin_free());
    Ok(d)
}

/// Blow-up composition: replaces vertex `i` of `r` by `blocks[i]` and adds
/// all arcs from block `i` to block `j` whenever `(i,j)` is an arc of `r`.
pub fn blowup(r: &Digraph, blocks: &[Digraph]) -> Result<Digraph> {
    if blocks.len() != r.order() {
        return Err(Error::Input(format!(
            "blow-up needs {} blocks, got {}",
            r.order(),
            blocks.len()
        )));
    }
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut n = 0usize;
    for b in blocks {
        offsets.push(n);
        n += b.order();
    }
    let mut arcs = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for (u, v) in b.arcs() {
            arcs.push((offsets[i] + u, offsets[i] + v));
        }
    }
    for (i, j) in r.arcs() {
        for u in 0..blocks[i].order() {
            for v in 0..blocks[j].order() {
                arcs.push((offsets[i] + u, offsets[j] + v));
            }
        }
    }
    Digraph::new(n, &arcs)
}

/// Orients every unordered pair by a seeded coin flip.
pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Digraph::new(n, &arcs).expect("tournament arcs in range")
}

fn random_strong_tournament(m: usize, rng: &mut ChaCha8Rng) -> Result<Digraph> {
    debug_assert!(m == 1 || m >= 3, "no strong tournament on 2 vertices");
    if m == 1 {
        return Digraph::new(1, &[]);
    }
    for _ in 0..500 {
        let t = random_tournament(m, rng.gen());
        if t.is_strong() {
            return Ok(t);
        }
    }
    Err(Error::Generation(format!(
        "no strong tournament of order {m} found within the retry budget"
    )))
}

/// Draws a round simple quotient by sampling interval out-degrees and
/// validating the labelling; resamples on failure. `wrap` selects a strong
/// (circular) quotient, otherwise a non-strong (linear) one.
fn random_round_quotient(r: usize, wrap: bool, rng: &mut ChaCha8Rng) -> Result<Digraph> {
    debug_assert!(r >= 3);
    let cap = 3.min(r - 1);
    for _ in 0..500 {
        let mut arcs = Vec::new();
        if wrap {
            for i in 0..r {
                let deg = rng.gen_range(1..=cap);
                for j in 1..=deg {
                    arcs.push((i, (i + j) % r));
                }
            }
        } else {
            for i in 0..r - 1 {
                let deg = rng.gen_range(1..=cap.min(r - 1 - i));
                for j in 1..=deg {
                    arcs.push((i, i + j));
                }
            }
        }
        let q = Digraph::new(r, &arcs)?;
        let simple = (0..r).all(|u| (u + 1..r).all(|v| !(q.has_arc(u, v) && q.has_arc(v, u))));
        let tournament = (0..r).all(|u| (u + 1..r).all(|v| q.has_arc(u, v) || q.has_arc(v, u)));
        let order: Vec<usize> = (0..r).collect();
        if simple && !tournament && is_round_labelling(&q, &order)? && q.is_strong() == wrap {
            return Ok(q);
        }
    }
    Err(Error::Generation(format!(
        "no valid round quotient of order {r} found within the retry budget"
    )))
}

/// Random roundable local tournament: a random round quotient blown up by
/// random strong tournament blocks whose sizes sum to roughly `n_target`.
/// Block sizes stay small so the solver's tournament subroutines stay well
/// inside the exact-search cutoff.
pub fn random_round_blowup(n_target: usize, seed: u64) -> Result<BlowupInstance> {
    if n_target < 3 {
        return Err(Error::Input("blow-up generation needs n ≥ 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_r = (n_target).min(9).max(3);
    let r = rng.gen_range(3..=max_r);
    let mut sizes = vec![1usize; r];
    let mut total = r;
    for _ in 0..4 * n_target {
        if total >= n_target {
            break;
        }
        let i = rng.gen_range(0..r);
        let grown = match sizes[i] {
            1 => 3,
            s if s < 5 => s + 1,
            s => s,
        };
        if grown != sizes[i] && total + grown - sizes[i] <= n_target {
            total += grown - sizes[i];
            sizes[i] = grown;
        }
    }
    let wrap = rng.gen_bool(0.5);
    let quotient = random_round_quotient(r, wrap, &mut rng)?;
    let block_graphs: Vec<Digraph> = sizes
        .iter()
        .map(|&m| random_strong_tournament(m, &mut rng))
        .collect::<Result<_>>()?;
    let digraph = blowup(&quotient, &block_graphs)?;
    let mut blocks = Vec::with_capacity(r);
    let mut offset = 0;
    for &m in &sizes {
        blocks.push((offset..offset + m).collect());
        offset += m;
    }
    let cl = classify(&digraph);
    if !cl.local_tournament || !digraph.is_connected() {
        return Err(Error::Internal(
            "blow-up of a round simple quotient by strong tournaments must be a connected local tournament"
                .into(),
        ));
    }
    let strong = digraph.is_strong();
    if strong != wrap {
        return Err(Error::Internal(
            "blow-up strongness must match the quotient".into(),
        ));
    }
    Ok(BlowupInstance {
        digraph,
        quotient,
        blocks,
        strong,
    })
}

/// Random connected local tournament of roughly the requested order.
pub fn random_local_tournament(n_target: usize, seed: u64) -> Result<Digraph> {
    Ok(random_round_blowup(n_target, seed)?.digraph)
}

/// Random digraph with arc probability `p`, rejection-sampled until the
/// filter accepts (bounded retries).
pub fn random_digraph(
    n: usize,
    p: f64,
    seed: u64,
    filter: RandomFilter,
    max_tries: usize,
) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("arc probability {p} outside [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries.max(1) {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(p) {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::new(n, &arcs)?;
        if filter.accepts(&d) {
            return Ok(d);
        }
    }
    Err(Error::Generation(format!(
        "no digraph accepted by filter `{}` within {max_tries} tries (n={n}, p={p})",
        filter.as_str()
    )))
}

/// A named family plus its parameters; `generate` is deterministic in
/// `(spec, seed)`.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    ApexTriangles { k: usize },
    HubTriangles { k: usize },
    RandomTournament { n: usize },
    RandomLocalTournament { n: usize },
    RandomDigraph { n: usize, p: f64, filter: RandomFilter },
}

impl FamilySpec {
    pub fn generate(&self, seed: u64) -> Result<Digraph> {
        match *self {
            FamilySpec::ApexTriangles { k } => apex_triangles(k),
            FamilySpec::HubTriangles { k } => hub_triangles(k),
            FamilySpec::RandomTournament { n } => Ok(random_tournament(n, seed)),
            FamilySpec::RandomLocalTournament { n } => random_local_tournament(n, seed),
            FamilySpec::RandomDigraph { n, p, filter } => {
                random_digraph(n, p, seed, filter, 2000)
            }
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::ApexTriangles { .. } => "apex-triangles",
            FamilySpec::HubTriangles { .. } => "hub-triangles",
            FamilySpec::RandomTournament { .. } => "random-tournament",
            FamilySpec::RandomLocalTournament { .. } => "random-local-tournament",
            FamilySpec::RandomDigraph { .. } => "random-digraph",
        }
    }

    pub fn params_string(&self) -> String {
        match *self {
            FamilySpec::ApexTriangles { k } | FamilySpec::HubTriangles { k } => format!("k={k}"),
            FamilySpec::RandomTournament { n } | FamilySpec::RandomLocalTournament { n } => {
                format!("n={n}")
            }
            FamilySpec::RandomDigraph { n, p, filter } => {
                format!("n={n};p={p};filter={}", filter.as_str())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;

    #[test]
    fn apex_triangles_shape() {
        let d = apex_triangles(3).unwrap();
        assert_eq!(d.order(), 11);
        assert!(d.is_strong());
        assert!(structure::twin_report(&d).quasi_twin_free());
        assert!(apex_triangles(0).is_err());
        for k in 1..=3 {
            let d = apex_triangles(k).unwrap();
            assert!(d.is_strong());
            assert!(structure::twin_report(&d).quasi_twin_free());
        }
    }

    #[test]
    fn hub_triangles_shape() {
        let d = hub_triangles(3).unwrap();
        assert_eq!(d.order(), 10);
        let cl = classify(&d);
        assert!(cl.locally_in_semicomplete);
        assert!(structure::twin_report(&d).quasi_twin_free());
        assert!(hub_triangles(0).is_err());

        // the reverse is locally out-semicomplete
        let rev = d.reverse();
        assert!(classify(&rev).locally_out_semicomplete);
    }

    #[test]
    fn blowup_examples() {
        // single arc with a triangle block and a singleton
        let r = Digraph::new(2, &[(0, 1)]).unwrap();
        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let single = Digraph::new(1, &[]).unwrap();
        let d = blowup(&r, &[tri, single]).unwrap();
        assert_eq!(d.order(), 4);
        assert!(d.has_arc(0, 3) && d.has_arc(1, 3) && d.has_arc(2, 3));

        // identity blow-up of a 4-cycle
        let c4 = Digraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let singles: Vec<Digraph> = (0..4).map(|_| Digraph::new(1, &[]).unwrap()).collect();
        assert_eq!(blowup(&c4, &singles).unwrap(), c4);

        assert!(blowup(&c4, &[]).is_err());
    }

    #[test]
    fn random_tournament_properties() {
        let d = random_tournament(1, 0);
        assert_eq!(d.order(), 1);

        let d = random_tournament(6, 1);
        assert!(classify(&d).tournament);

        assert_eq!(random_tournament(9, 42), random_tournament(9, 42));
        assert_ne!(random_tournament(9, 42), random_tournament(9, 43));
    }

    #[test]
    fn random_blowups_are_local_tournaments() {
        for seed in 0..30 {
            let inst = random_round_blowup(14, seed).unwrap();
            let cl = classify(&inst.digraph);
            assert!(cl.local_tournament);
            assert!(!cl.tournament);
            assert!(inst.digraph.is_connected());
            assert_eq!(inst.digraph, random_round_blowup(14, seed).unwrap().digraph);
        }
    }

    #[test]
    fn random_digraph_filters() {
        let full = random_digraph(4, 1.0, 0, RandomFilter::Strong, 10).unwrap();
        assert_eq!(full.arc_count(), 12);
        assert!(full.is_strong());

        let empty = random_digraph(4, 0.0, 0, RandomFilter::Any, 10).unwrap();
        assert_eq!(empty.arc_count(), 0);

        let d = random_digraph(12, 0.3, 7, RandomFilter::StrongQuasiTwinFree, 500).unwrap();
        assert!(d.is_strong());
        assert!(structure::twin_report(&d).quasi_twin_free());

        // p = 0 can never be strong on 2+ vertices
        assert!(matches!(
            random_digraph(3, 0.0, 0, RandomFilter::Strong, 5),
            Err(Error::Generation(_))
        ));
    }
}

//! Certified `⌈n/2⌉` locating-dominating sets for strong connected local
//! tournaments with no round decomposition, plus the top-level dispatcher
//! for all connected local tournaments.
//!
//! Such a digraph always has a minimal separator `X` whose removal leaves a
//! connected non-strong local tournament `D[Y]` (not a tournament) whose
//! canonical decomposition `T_1,…,T_r` has `r ≥ 3` blocks, with all arcs
//! from `T_r` into `X` and from `X` into `T_1`. The four combination cases
//! split on whether `T_r` and `X` are singletons. All of these structural
//! properties are re-verified on the raw digraph before they are used.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ld::{self, CertifiedSet, SetKind, DEFAULT_CUTOFF};
use crate::roundable;
use crate::structure::{
    self, decomposition_from_blocks, local_tournament_violation, minimal_separators,
    round_decomposition,
};
use crate::vset;

/// Separator-based decomposition of a strong non-roundable local
/// tournament: the separator `X`, the remainder `Y`, the remainder without
/// the last block `Z`, and the canonical blocks of `D[Y]` in original ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorDecomposition {
    pub separator: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
    /// Canonical blocks of `D[Y]`, original vertex ids, quotient order.
    pub blocks: Vec<Vec<usize>>,
    /// 1: `|T_r| = 1, |X| = 1`; 2: `|T_r| = 1, |X| > 1`;
    /// 3: `|T_r| > 1, |X| = 1`; 4: both larger.
    pub case_id: u8,
}

fn strong_without(d: &Digraph, removed: &[usize]) -> bool {
    let rest = vset::difference(&d.vertices(), removed);
    if rest.len() <= 1 {
        return true;
    }
    let (sub, _) = d.induced(&rest).expect("subset of vertices");
    sub.is_strong()
}

/// Checks the separator properties for an explicit `X` and assembles the
/// decomposition. Intended for tests and instances where `X` is known; the
/// non-roundability of `d` itself is not required here, only the structural
/// properties the combination proofs actually use.
pub fn separator_decomposition_with(d: &Digraph, x: &[usize]) -> Result<SeparatorDecomposition> {
    let x = vset::normalize(x.to_vec());
    let n = d.order();
    if x.is_empty() || x.iter().any(|&v| v >= n) {
        return Err(Error::Input("separator must be a nonempty vertex subset".into()));
    }
    let y = vset::difference(&d.vertices(), &x);
    if y.len() < 2 {
        return Err(Error::Domain("separator leaves fewer than 2 vertices".into()));
    }

    let (dy, ymap) = d.induced(&y)?;
    if dy.is_strong() {
        return Err(Error::Domain("removing the separator leaves a strong digraph".into()));
    }
    for &v in &x {
        let smaller: Vec<usize> = x.iter().copied().filter(|&w| w != v).collect();
        if !strong_without(d, &smaller) {
            return Err(Error::Domain(format!(
                "separator is not inclusion-minimal: dropping {v} still separates"
            )));
        }
    }
    if !dy.is_connected() {
        return Err(Error::Domain("remainder is not connected".into()));
    }
    if let Some(reason) = local_tournament_violation(&dy) {
        return Err(Error::Domain(format!("remainder is not a local tournament: {reason}")));
    }
    if dy.is_tournament_on(&dy.vertices()) {
        return Err(Error::Domain("remainder is a tournament".into()));
    }
    if !d.is_tournament_on(&x) {
        return Err(Error::Domain("separator does not induce a tournament".into()));
    }

    let dec = round_decomposition(&dy)?
        .ok_or_else(|| Error::Domain("remainder has no round decomposition".into()))?;
    if !dec.canonical {
        return Err(Error::Internal("non-strong remainder must decompose canonically".into()));
    }
    let blocks: Vec<Vec<usize>> = dec
        .blocks
        .iter()
        .map(|b| b.iter().map(|&v| ymap[v]).collect())
        .collect();
    let r = blocks.len();
    if r < 3 {
        return Err(Error::Domain(format!(
            "remainder decomposes into {r} blocks; need at least 3"
        )));
    }
    let last = &blocks[r - 1];
    for &u in last {
        for &v in &x {
            if !d.has_arc(u, v) {
                return Err(Error::Domain(format!(
                    "missing arc from last block vertex {u} to separator vertex {v}"
                )));
            }
        }
    }
    for &u in &x {
        for &v in &blocks[0] {
            if !d.has_arc(u, v) {
                return Err(Error::Domain(format!(
                    "missing arc from separator vertex {u} to first block vertex {v}"
                )));
            }
        }
    }

    let z = vset::difference(&y, last);
    let case_id = match (last.len() == 1, x.len() == 1) {
        (true, true) => 1,
        (true, false) => 2,
        (false, true) => 3,
        (false, false) => 4,
    };
    Ok(SeparatorDecomposition {
        separator: x,
        y,
        z,
        blocks,
        case_id,
    })
}

/// Finds a separator decomposition of a strong, non-roundable, connected
/// local tournament by trying inclusion-minimal separators in increasing
/// size and lexicographic order until the structural properties hold.
pub fn separator_decomposition(d: &Digraph) -> Result<SeparatorDecomposition> {
    if !d.is_connected() {
        return Err(Error::Domain("not connected".into()));
    }
    if let Some(reason) = local_tournament_violation(d) {
        return Err(Error::Domain(format!("not a local tournament: {reason}")));
    }
    if d.is_tournament_on(&d.vertices()) {
        return Err(Error::Domain("input is a tournament; no separator step needed".into()));
    }
    if !d.is_strong() {
        return Err(Error::Domain("not strong: non-strong local tournaments are roundable".into()));
    }
    if round_decomposition(d)?.is_some() {
        return Err(Error::Domain("input is roundable; use the roundable pipeline".into()));
    }
    let candidates = minimal_separators(d, 128)?;
    for x in &candidates {
        match separator_decomposition_with(d, x) {
            Ok(sdec) => return Ok(sdec),
            Err(Error::Domain(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal(
        "no minimal separator satisfies the structural properties".into(),
    ))
}

/// Runs the backwards assembly on an induced subgraph whose canonical
/// blocks are known, returning the set in original ids.
fn assembled_set_on(d: &Digraph, verts: &[usize], blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let (sub, map) = d.induced(verts)?;
    let local_blocks: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|v| map.binary_search(v).expect("block vertex inside subset"))
                .collect()
        })
        .collect();
    let dec = decomposition_from_blocks(&sub, local_blocks, true)?;
    let seg = roundable::segment(&sub, &dec)?;
    let trace = roundable::construct_set(&sub, &dec, &seg, DEFAULT_CUTOFF)?;
    Ok(trace.set.into_iter().map(|v| map[v]).collect())
}

/// Combines the separator parts into a certified locating-dominating set.
pub fn combine_cases(d: &Digraph, sdec: &SeparatorDecomposition) -> Result<CertifiedSet> {
    let n = d.order();
    let x = &sdec.separator;
    let r = sdec.blocks.len();
    let last = &sdec.blocks[r - 1];

    let set = match sdec.case_id {
        1 => {
            // last block plus a locating-dominating set of the core
            let (dz, zmap) = d.induced(&sdec.z)?;
            if dz.is_strong() {
                return Err(Error::Internal("core of the separator decomposition must not be strong".into()));
            }
            let inner = solve_local_tournament(&dz)?;
            let mapped: Vec<usize> = inner.vertices.iter().map(|&v| zmap[v]).collect();
            let set = vset::union(last, &mapped);
            let budget = sdec.z.len().div_ceil(2) + 1;
            if set.len() > budget {
                return Err(Error::Internal(format!(
                    "case 1 set has {} vertices, above ⌈n_2/2⌉+1 = {budget}",
                    set.len()
                )));
            }
            set
        }
        2 => {
            // last block, the core assembly, and a locating set of the separator
            let core = assembled_set_on(d, &sdec.z, &sdec.blocks[..r - 1])?;
            let (dx, xmap) = d.induced(x)?;
            let xloc = ld::tournament_locating_set(&dx, DEFAULT_CUTOFF)?;
            let xmapped: Vec<usize> = xloc.vertices.iter().map(|&v| xmap[v]).collect();
            let set = vset::union(&vset::union(last, &core), &xmapped);
            let budget = (n - 1 - x.len()) / 2 + x.len() / 2 + 1;
            if set.len() > budget {
                return Err(Error::Internal(format!(
                    "case 2 set has {} vertices, above ⌊(n−1−|X|)/2⌋+⌊|X|/2⌋+1 = {budget}",
                    set.len()
                )));
            }
            set
        }
        3 => {
            // full remainder assembly plus the separator vertex
            let outer = assembled_set_on(d, &sdec.y, &sdec.blocks)?;
            let set = vset::union(&outer, x);
            let budget = (n - 1) / 2 + 1;
            if set.len() > budget {
                return Err(Error::Internal(format!(
                    "case 3 set has {} vertices, above ⌊(n−1)/2⌋+1 = {budget}",
                    set.len()
                )));
            }
            set
        }
        4 => {
            // full remainder assembly plus a locating-dominating set of the separator
            let outer = assembled_set_on(d, &sdec.y, &sdec.blocks)?;
            let (dx, xmap) = d.induced(x)?;
            let xld = ld::tournament_ld_set(&dx, DEFAULT_CUTOFF)?;
            let xmapped: Vec<usize> = xld.vertices.iter().map(|&v| xmap[v]).collect();
            let set = vset::union(&outer, &xmapped);
            let budget = (n - x.len()) / 2 + x.len().div_ceil(2);
            if set.len() > budget {
                return Err(Error::Internal(format!(
                    "case 4 set has {} vertices, above ⌊(n−|X|)/2⌋+⌈|X|/2⌉ = {budget}",
                    set.len()
                )));
            }
            set
        }
        c => return Err(Error::Internal(format!("unknown case id {c}"))),
    };

    let bound = n.div_ceil(2);
    let report = ld::evaluate_set(d, &set);
    if !report.ld {
        return Err(Error::Internal(format!(
            "case {} set failed the locating-dominating check",
            sdec.case_id
        )));
    }
    if set.len() > bound {
        return Err(Error::Internal(format!(
            "case {} set has {} vertices, above ⌈{n}/2⌉ = {bound}",
            sdec.case_id,
            set.len()
        )));
    }
    Ok(CertifiedSet {
        vertices: set,
        kind: SetKind::LocatingDominating,
        claimed_bound: bound,
        verified: true,
        trace_tag: format!("nonroundable-case{}", sdec.case_id),
    })
}

/// Dispatcher for connected local tournaments: tournaments go to the exact
/// subroutine, roundable inputs to the segment pipeline, and the remaining
/// strong non-roundable inputs through the separator cases. The result is a
/// verified locating-dominating set of size at most `⌈n/2⌉`.
pub fn solve_local_tournament(d: &Digraph) -> Result<CertifiedSet> {
    if d.order() == 0 {
        return Err(Error::Domain("empty digraph".into()));
    }
    if !d.is_connected() {
        return Err(Error::Domain("not connected".into()));
    }
    if let Some(reason) = local_tournament_violation(d) {
        return Err(Error::Domain(format!("not a local tournament: {reason}")));
    }
    if d.is_tournament_on(&d.vertices()) {
        return ld::tournament_ld_set(d, DEFAULT_CUTOFF);
    }
    match round_decomposition(d)? {
        Some(dec) => Ok(roundable::solve_roundable_with(d, &dec)?.0),
        None => {
            let sdec = separator_decomposition(d)?;
            combine_cases(d, &sdec)
        }
    }
}

/// The smallest known strong local tournament with no round decomposition:
/// a source block, a directed triangle woven both ways with an extra return
/// vertex path. Used as a deterministic regression instance.
pub fn sample_nonroundable() -> Digraph {
    // 0 → {1,2,3}; triangle 1→2→3→1; {1,2,3} → 4; 4 → 5; 5 → {0,1}; {2,3} → 5
    Digraph::new(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (2, 3),
            (3, 1),
            (1, 4),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 0),
            (5, 1),
            (2, 5),
            (3, 5),
        ],
    )
    .expect("fixed arc list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::classify;

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    #[test]
    fn explicit_separator_on_five_cycle() {
        let d = cycle(5);
        let sdec = separator_decomposition_with(&d, &[4]).unwrap();
        assert_eq!(sdec.case_id, 1);
        assert_eq!(sdec.y, vec![0, 1, 2, 3]);
        assert_eq!(sdec.z, vec![0, 1, 2]);
        assert_eq!(sdec.blocks, vec![vec![0], vec![1], vec![2], vec![3]]);

        let cert = combine_cases(&d, &sdec).unwrap();
        assert_eq!(cert.vertices, vec![0, 1, 3]);
        assert_eq!(cert.size(), 3);
        assert!(cert.verified);
    }

    #[test]
    fn separator_rejects_roundable_inputs() {
        assert!(matches!(
            separator_decomposition(&cycle(4)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sample_instance_is_strong_nonroundable() {
        let d = sample_nonroundable();
        let cl = classify(&d);
        assert!(cl.local_tournament && !cl.tournament);
        assert!(d.is_strong());
        assert!(round_decomposition(&d).unwrap().is_none());
    }

    #[test]
    fn sample_instance_solves_through_the_separator() {
        let d = sample_nonroundable();
        let sdec = separator_decomposition(&d).unwrap();
        assert_eq!(sdec.separator, vec![5]);
        assert_eq!(sdec.case_id, 1);
        let cert = combine_cases(&d, &sdec).unwrap();
        assert_eq!(cert.vertices, vec![0, 1, 4]);
        assert!(cert.verified);
        assert_eq!(cert.size(), 3);

        let dispatched = solve_local_tournament(&d).unwrap();
        assert_eq!(dispatched.vertices, cert.vertices);
        assert_eq!(dispatched.trace_tag, "nonroundable-case1");
    }

    #[test]
    fn dispatcher_examples() {
        let c3 = cycle(3);
        let cert = solve_local_tournament(&c3).unwrap();
        assert_eq!(cert.size(), 2);
        assert_eq!(cert.trace_tag, "tournament-ld");

        let p3 = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cert = solve_local_tournament(&p3).unwrap();
        assert_eq!(cert.vertices, vec![0, 1]);
        assert_eq!(cert.trace_tag, "roundable");

        let edgeless = Digraph::new(3, &[]).unwrap();
        let err = solve_local_tournament(&edgeless).unwrap_err();
        assert!(err.to_string().contains("not connected"));

        let star = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let err = solve_local_tournament(&star).unwrap_err();
        assert!(err.to_string().contains("not a local tournament"));
    }

    #[test]
    fn dispatcher_handles_tiny_inputs() {
        let k1 = Digraph::new(1, &[]).unwrap();
        let cert = solve_local_tournament(&k1).unwrap();
        assert_eq!(cert.vertices, vec![0]);
        assert_eq!(cert.claimed_bound, 1);

        let arc = Digraph::new(2, &[(0, 1)]).unwrap();
        let cert = solve_local_tournament(&arc).unwrap();
        assert_eq!(cert.vertices, vec![0]);
    }
}

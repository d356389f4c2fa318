//! Recognizers and decompositions: tournament / local tournament
//! classification, twin and quasi-twin detection, round decompositions and
//! minimal separators.
//!
//! A digraph is *round* if its vertices admit a circular labelling in which
//! every in- and out-neighbourhood is a set of consecutive vertices. A local
//! tournament is *roundable* if it is a blow-up `R[T_1,…,T_r]` of a round
//! simple digraph `R` (`r ≥ 2`) by strong tournaments `T_i`. When the input
//! is not strong the decomposition is canonical (all block arcs forward and
//! the blocks are exactly the strong components); when it is strong the
//! decomposition is unique up to rotation and we anchor the rotation at the
//! block containing vertex 0.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vset;

/// Membership flags for the digraph classes used by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub simple: bool,
    pub tournament: bool,
    pub local_tournament: bool,
    pub locally_in_semicomplete: bool,
    pub locally_out_semicomplete: bool,
}

/// All twin-like pairs of a digraph, re-checkable from the definitions:
/// open twins share `N⁻`, closed twins share `N⁻[·]`, and quasi-twins
/// satisfy `N⁻(x) = N⁻[y]` (either way around).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinReport {
    pub open_twins: Vec<(usize, usize)>,
    pub closed_twins: Vec<(usize, usize)>,
    pub quasi_twins: Vec<(usize, usize)>,
}

impl TwinReport {
    pub fn twin_free(&self) -> bool {
        self.open_twins.is_empty() && self.closed_twins.is_empty()
    }

    pub fn quasi_twin_free(&self) -> bool {
        self.twin_free() && self.quasi_twins.is_empty()
    }
}

/// A round decomposition `R[T_1,…,T_r]`: ordered blocks, the quotient on
/// block indices, and whether the decomposition is canonical (non-strong
/// input, all block arcs forward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundDecomposition {
    /// Disjoint nonempty vertex sets covering the digraph, each inducing a
    /// strong tournament, in quotient order.
    pub blocks: Vec<Vec<usize>>,
    /// Quotient digraph; vertex `i` stands for `blocks[i]`, and the identity
    /// order `0..r` is a round labelling.
    pub quotient: Digraph,
    pub canonical: bool,
    /// Vertex used to fix the rotation when the input is strong.
    pub rotation_anchor: Option<usize>,
}

impl RoundDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| vset::contains(b, v))
            .expect("vertex in some block")
    }
}

pub fn classify(d: &Digraph) -> Classification {
    let n = d.order();
    let mut simple = true;
    let mut tournament = n >= 1;
    for u in 0..n {
        for v in u + 1..n {
            let uv = d.has_arc(u, v);
            let vu = d.has_arc(v, u);
            if uv && vu {
                simple = false;
            }
            if uv == vu {
                tournament = false;
            }
        }
    }
    let mut local_in_tournament = true;
    let mut local_out_tournament = true;
    let mut locally_in_semicomplete = true;
    let mut locally_out_semicomplete = true;
    for v in 0..n {
        let inn = d.in_neighbours(v);
        let out = d.out_neighbours(v);
        if !d.is_tournament_on(inn) {
            local_in_tournament = false;
        }
        if !d.is_tournament_on(out) {
            local_out_tournament = false;
        }
        if !d.is_semicomplete_on(inn) {
            locally_in_semicomplete = false;
        }
        if !d.is_semicomplete_on(out) {
            locally_out_semicomplete = false;
        }
    }
    Classification {
        simple,
        tournament,
        local_tournament: simple && local_in_tournament && local_out_tournament,
        locally_in_semicomplete,
        locally_out_semicomplete,
    }
}

/// Human-readable reason why `d` is not a local tournament, if any.
pub fn local_tournament_violation(d: &Digraph) -> Option<String> {
    for u in 0..d.order() {
        for v in u + 1..d.order() {
            if d.has_arc(u, v) && d.has_arc(v, u) {
                return Some(format!("not simple: arcs both ways between {u} and {v}"));
            }
        }
    }
    for v in 0..d.order() {
        if !d.is_tournament_on(d.in_neighbours(v)) {
            return Some(format!(
                "in-neighbourhood of {v} does not induce a tournament"
            ));
        }
        if !d.is_tournament_on(d.out_neighbours(v)) {
            return Some(format!(
                "out-neighbourhood of {v} does not induce a tournament"
            ));
        }
    }
    None
}

/// Exhaustive pairwise twin scan.
pub fn twin_report(d: &Digraph) -> TwinReport {
    let n = d.order();
    let mut report = TwinReport {
        open_twins: Vec::new(),
        closed_twins: Vec::new(),
        quasi_twins: Vec::new(),
    };
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s = d.in_neighbours(v).to_vec();
            vset::insert(&mut s, v);
            s
        })
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            let nx = d.in_neighbours(x);
            let ny = d.in_neighbours(y);
            if nx == ny {
                report.open_twins.push((x, y));
            }
            if closed[x] == closed[y] {
                report.closed_twins.push((x, y));
            }
            if nx == closed[y].as_slice() || ny == closed[x].as_slice() {
                report.quasi_twins.push((x, y));
            }
        }
    }
    report
}

/// True when `order` is a circular labelling in which every vertex's
/// in-neighbours are the immediately preceding vertices and its
/// out-neighbours the immediately following ones.
pub fn is_round_labelling(d: &Digraph, order: &[usize]) -> Result<bool> {
    let n = d.order();
    if order.len() != n {
        return Err(Error::Input(format!(
            "order has length {} but the digraph has {n} vertices",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::Input("order is not a permutation".into()));
        }
        seen[v] = true;
    }
    for (i, &v) in order.iter().enumerate() {
        for j in 1..=d.out_degree(v) {
            if !d.has_arc(v, order[(i + j) % n]) {
                return Ok(false);
            }
        }
        for j in 1..=d.in_degree(v) {
            if !d.has_arc(order[(i + n - j % n) % n], v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest module containing `seed`: grows the set while some outside
/// vertex relates non-uniformly to it (neither dominating all of it, nor
/// dominated by all of it, nor non-adjacent to all of it).
pub(crate) fn modular_closure(d: &Digraph, seed: &[usize]) -> Vec<usize> {
    let mut module = vset::normalize(seed.to_vec());
    loop {
        let mut absorbed = None;
        'scan: for x in 0..d.order() {
            if vset::contains(&module, x) {
                continue;
            }
            let mut outs = 0usize;
            let mut ins = 0usize;
            for &a in &module {
                if d.has_arc(x, a) {
                    outs += 1;
                }
                if d.has_arc(a, x) {
                    ins += 1;
                }
            }
            let m = module.len();
            let uniform = (outs == m && ins == 0) || (ins == m && outs == 0) || (outs == 0 && ins == 0);
            if !uniform {
                absorbed = Some(x);
                break 'scan;
            }
        }
        match absorbed {
            Some(x) => vset::insert(&mut module, x),
            None => return module,
        }
    }
}

/// Largest proper module containing `u` that induces a strong tournament:
/// the union of all pair closures `⟨u,v⟩` that stay proper and induce strong
/// tournaments. In a strong blow-up of a round simple digraph this is
/// exactly the block of `u`.
fn strong_tournament_block(d: &Digraph, u: usize) -> Vec<usize> {
    let n = d.order();
    let mut block = vec![u];
    for v in 0..n {
        if v == u {
            continue;
        }
        let closure = modular_closure(d, &[u, v]);
        if closure.len() < n && d.is_strong_tournament_on(&closure) {
            block = vset::union(&block, &closure);
        }
    }
    block
}

/// Incremental consistency of a partial circular order: in-neighbours among
/// placed positions must form a run ending at the last position, and every
/// placed vertex's out-arcs into the prefix must be gap-free.
fn prefix_consistent(q: &Digraph, order: &[usize], cand: usize) -> bool {
    let m = order.len();
    let mut boundary_seen = false;
    for i in (0..m).rev() {
        if q.has_arc(order[i], cand) {
            if boundary_seen {
                return false;
            }
        } else {
            boundary_seen = true;
        }
    }
    for i in 0..m.saturating_sub(1) {
        if q.has_arc(order[i], cand) && !q.has_arc(order[i], order[m - 1]) {
            return false;
        }
    }
    true
}

fn search_round_order(
    q: &Digraph,
    order: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Vec<usize>> {
    let r = q.order();
    if order.len() == r {
        if is_round_labelling(q, order).expect("permutation by construction") {
            return Some(order.clone());
        }
        return None;
    }
    let last = *order.last().expect("anchored order");
    for cand in 0..r {
        if used[cand] || !q.has_arc(last, cand) || !prefix_consistent(q, order, cand) {
            continue;
        }
        order.push(cand);
        used[cand] = true;
        if let Some(found) = search_round_order(q, order, used) {
            return Some(found);
        }
        order.pop();
        used[cand] = false;
    }
    None
}

/// Builds the quotient over `blocks`, verifying that arcs between distinct
/// blocks are all-or-none. Returns `None` if a block pair has partial arcs.
fn quotient_over(d: &Digraph, blocks: &[Vec<usize>]) -> Option<Digraph> {
    let r = blocks.len();
    let mut arcs = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let mut count = 0usize;
            for &u in &blocks[i] {
                for &v in &blocks[j] {
                    if d.has_arc(u, v) {
                        count += 1;
                    }
                }
            }
            if count == blocks[i].len() * blocks[j].len() {
                arcs.push((i, j));
            } else if count != 0 {
                return None;
            }
        }
    }
    Some(Digraph::new(r, &arcs).expect("quotient arcs in range"))
}

/// Round decomposition of a connected local tournament, or `None` if no
/// decomposition with at least two blocks exists.
pub fn round_decomposition(d: &Digraph) -> Result<Option<RoundDecomposition>> {
    if !d.is_connected() {
        return Err(Error::Domain("not connected".into()));
    }
    if let Some(reason) = local_tournament_violation(d) {
        return Err(Error::Domain(format!("not a local tournament: {reason}")));
    }
    if d.order() < 2 {
        return Ok(None);
    }

    if !d.is_strong() {
        // Canonical case: blocks are exactly the strong components in the
        // unique topological order of the condensation.
        let scc = d.strong_components();
        let blocks = scc.components;
        if blocks.iter().any(|b| !d.is_tournament_on(b)) {
            return Ok(None);
        }
        let Some(quotient) = quotient_over(d, &blocks) else {
            return Ok(None);
        };
        // Consecutive blocks must be completely adjacent, which also pins
        // the topological order as the unique one.
        for i in 0..blocks.len() - 1 {
            if !quotient.has_arc(i, i + 1) {
                return Ok(None);
            }
        }
        if !quotient_simple(&quotient) || !is_round_labelling(&quotient, &identity(quotient.order()))? {
            return Ok(None);
        }
        let dec = RoundDecomposition {
            blocks,
            quotient,
            canonical: true,
            rotation_anchor: None,
        };
        verify_round_decomposition(d, &dec)?;
        return Ok(Some(dec));
    }

    // Strong case: discover blocks as maximal strong-tournament modules,
    // then search for a circular order of the quotient.
    let n = d.order();
    let mut assigned = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let block = strong_tournament_block(d, u);
        if block.iter().any(|&v| assigned[v]) || !d.is_strong_tournament_on(&block) {
            return Ok(None);
        }
        for &v in &block {
            assigned[v] = true;
        }
        blocks.push(block);
    }
    if blocks.len() < 2 {
        return Ok(None);
    }
    let Some(quotient) = quotient_over(d, &blocks) else {
        return Ok(None);
    };
    if !quotient_simple(&quotient) || !quotient.is_strong() {
        return Ok(None);
    }
    let mut order = vec![0usize];
    let mut used = vec![false; blocks.len()];
    used[0] = true;
    let Some(order) = search_round_order(&quotient, &mut order, &mut used) else {
        return Ok(None);
    };
    let blocks: Vec<Vec<usize>> = order.iter().map(|&i| blocks[i].clone()).collect();
    let quotient = quotient_over(d, &blocks).expect("all-or-none already verified");
    let dec = RoundDecomposition {
        rotation_anchor: Some(blocks[0][0]),
        blocks,
        quotient,
        canonical: false,
    };
    verify_round_decomposition(d, &dec)?;
    Ok(Some(dec))
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn quotient_simple(q: &Digraph) -> bool {
    for u in 0..q.order() {
        for v in u + 1..q.order() {
            if q.has_arc(u, v) && q.has_arc(v, u) {
                return false;
            }
        }
    }
    true
}

/// Re-checks every invariant of a round decomposition against the digraph.
pub fn verify_round_decomposition(d: &Digraph, dec: &RoundDecomposition) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(format!("round decomposition: {msg}")));
    let r = dec.blocks.len();
    if r < 2 {
        return fail("fewer than 2 blocks".into());
    }
    let mut covered = Vec::new();
    for block in &dec.blocks {
        if block.is_empty() {
            return fail("empty block".into());
        }
        if !vset::is_disjoint(&covered, block) {
            return fail("blocks overlap".into());
        }
        covered = vset::union(&covered, block);
        if !d.is_strong_tournament_on(block) {
            return fail(format!("block {block:?} is not a strong tournament"));
        }
    }
    if covered.len() != d.order() {
        return fail("blocks do not cover the vertex set".into());
    }
    if dec.quotient.order() != r {
        return fail("quotient order mismatch".into());
    }
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let expected = dec.quotient.has_arc(i, j);
            for &u in &dec.blocks[i] {
                for &v in &dec.blocks[j] {
                    if d.has_arc(u, v) != expected {
                        return fail(format!("arcs between blocks {i} and {j} are not all-or-none"));
                    }
                }
            }
        }
    }
    if !quotient_simple(&dec.quotient) {
        return fail("quotient is not simple".into());
    }
    if !is_round_labelling(&dec.quotient, &identity(r))? {
        return fail("quotient order is not a round labelling".into());
    }
    if dec.canonical {
        if d.is_strong() {
            return fail("canonical decomposition of a strong digraph".into());
        }
        for (i, j) in dec.quotient.arcs() {
            if i >= j {
                return fail("canonical decomposition has a backward arc".into());
            }
        }
    }
    Ok(())
}

/// True when removing `x` disconnects strongness. A remainder with a single
/// vertex counts as separated, so complete-like digraphs keep the usual
/// vertex-connectivity convention.
fn separates(d: &Digraph, x: &[usize]) -> bool {
    let y = vset::difference(&d.vertices(), x);
    if y.is_empty() {
        return false;
    }
    if y.len() == 1 {
        return true;
    }
    let (sub, _) = d.induced(&y).expect("subset of vertices");
    !sub.is_strong()
}

/// Up to `limit` inclusion-minimal separators of a strong digraph, in
/// increasing cardinality and lexicographic order within a cardinality.
pub fn minimal_separators(d: &Digraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    if !d.is_strong() {
        return Err(Error::Domain("not strongly connected".into()));
    }
    let n = d.order();
    if n < 3 {
        return Err(Error::Domain("separator search needs order ≥ 3".into()));
    }
    const BUDGET: usize = 4_000_000;
    let mut examined = 0usize;
    let mut found = Vec::new();
    for k in 1..n {
        let mut idx: Vec<usize> = (0..k).collect();
        'combos: loop {
            examined += 1;
            if examined > BUDGET {
                return Err(Error::Domain(
                    "separator search budget exhausted".into(),
                ));
            }
            if separates(d, &idx) {
                let minimal = idx.iter().all(|&v| {
                    let smaller: Vec<usize> = idx.iter().copied().filter(|&w| w != v).collect();
                    !separates(d, &smaller)
                });
                if minimal {
                    found.push(idx.clone());
                    if found.len() == limit {
                        return Ok(found);
                    }
                }
            }
            let mut i = k;
            loop {
                if i == 0 {
                    break 'combos;
                }
                i -= 1;
                if idx[i] < n - (k - i) {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        if !found.is_empty() {
            // separators of minimum cardinality exist; larger ones are only
            // needed when the caller asked for more than we found
            if found.len() >= limit {
                return Ok(found);
            }
        }
    }
    Ok(found)
}

/// The minimum-cardinality separator that is lexicographically smallest.
pub fn minimal_separator(d: &Digraph) -> Result<Vec<usize>> {
    minimal_separators(d, 1)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Domain("no separating vertex set exists".into()))
}

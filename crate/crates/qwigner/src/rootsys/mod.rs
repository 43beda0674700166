//! Reduced positive root systems of finite type, normal orderings, the
//! elementary inversion moves between them, and Cartan-Weyl construction
//! plans (which composite root is built from which minimal segment).

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{QError, QResult};

/// Supported finite types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    A1xA1,
    A2,
    B2,
    G2,
    /// A_n, 1 <= n <= 5
    A(usize),
}

impl Kind {
    pub fn parse(s: &str) -> QResult<Kind> {
        match s.to_uppercase().as_str() {
            "A1XA1" | "A1*A1" | "A1+A1" => Ok(Kind::A1xA1),
            "A1" => Ok(Kind::A(1)),
            "A2" => Ok(Kind::A2),
            "B2" | "C2" => Ok(Kind::B2),
            "G2" => Ok(Kind::G2),
            "A3" => Ok(Kind::A(3)),
            "A4" => Ok(Kind::A(4)),
            "A5" => Ok(Kind::A(5)),
            other => Err(QError::UnsupportedKind(other.to_string())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Kind::A1xA1 => "A1xA1".into(),
            Kind::A2 => "A2".into(),
            Kind::B2 => "B2".into(),
            Kind::G2 => "G2".into(),
            Kind::A(n) => format!("A{}", n),
        }
    }
}

/// A root as its integer coefficient vector over the simple roots.
pub type Root = Vec<i64>;

/// Reduced positive root system with its symmetric bilinear form.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: Kind,
    pub rank: usize,
    /// (alpha_i, alpha_j) on the simple roots (symmetrized Cartan matrix).
    pub pairing: Vec<Vec<Rational64>>,
    pub positive_roots: Vec<Root>,
}

/// Build the complete reduced positive system for a supported kind.
pub fn positive_roots(kind: Kind) -> QResult<RootSystem> {
    match kind {
        Kind::A1xA1 => Ok(RootSystem {
            kind,
            rank: 2,
            pairing: pairing_from(&[[2, 0], [0, 2]]),
            positive_roots: vec![vec![1, 0], vec![0, 1]],
        }),
        Kind::A2 => Ok(RootSystem {
            kind,
            rank: 2,
            pairing: pairing_from(&[[2, -1], [-1, 2]]),
            positive_roots: vec![vec![1, 0], vec![1, 1], vec![0, 1]],
        }),
        Kind::B2 => Ok(RootSystem {
            kind,
            rank: 2,
            // alpha_1 long, alpha_2 short
            pairing: pairing_from(&[[4, -2], [-2, 2]]),
            positive_roots: vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![0, 1]],
        }),
        Kind::G2 => Ok(RootSystem {
            kind,
            rank: 2,
            // alpha_1 long, alpha_2 short
            pairing: pairing_from(&[[6, -3], [-3, 2]]),
            positive_roots: vec![
                vec![1, 0],
                vec![1, 1],
                vec![2, 3],
                vec![1, 2],
                vec![1, 3],
                vec![0, 1],
            ],
        }),
        Kind::A(n) => {
            if n == 0 || n > 5 {
                return Err(QError::UnsupportedKind(format!("A{}", n)));
            }
            let mut pairing = vec![vec![Rational64::from(0); n]; n];
            for i in 0..n {
                pairing[i][i] = Rational64::from(2);
                if i + 1 < n {
                    pairing[i][i + 1] = Rational64::from(-1);
                    pairing[i + 1][i] = Rational64::from(-1);
                }
            }
            // roots alpha_i + ... + alpha_j ordered lexicographically by (i, j);
            // this is the normal ordering the Cartan-Weyl construction uses.
            let mut roots = Vec::new();
            for i in 0..n {
                for j in i..n {
                    let mut r = vec![0i64; n];
                    for v in r.iter_mut().take(j + 1).skip(i) {
                        *v = 1;
                    }
                    roots.push(r);
                }
            }
            Ok(RootSystem {
                kind,
                rank: n,
                pairing,
                positive_roots: roots,
            })
        }
    }
}

fn pairing_from<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<Rational64>> {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational64::from(x)).collect())
        .collect()
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive_roots.is_empty()
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.positive_roots.iter().position(|x| x == r)
    }

    /// Bilinear form on arbitrary integer combinations of simple roots.
    pub fn form(&self, a: &Root, b: &Root) -> Rational64 {
        let mut acc = Rational64::from(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += self.pairing[i][j] * Rational64::from(a[i] * b[j]);
            }
        }
        acc
    }

    /// (rho, gamma) where rho satisfies (rho, alpha_i) = (alpha_i, alpha_i)/2.
    pub fn rho_pairing(&self, gamma: &Root) -> Rational64 {
        let mut acc = Rational64::from(0);
        for (i, &c) in gamma.iter().enumerate() {
            acc += self.pairing[i][i] / 2 * Rational64::from(c);
        }
        acc
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.positive_roots.iter().any(|x| x == r)
    }

    /// Is `r` any root (positive or negative)?
    pub fn is_root(&self, r: &Root) -> bool {
        if self.is_positive_root(r) {
            return true;
        }
        let neg: Root = r.iter().map(|&c| -c).collect();
        self.is_positive_root(&neg)
    }

    fn is_simple(&self, idx: usize) -> bool {
        self.positive_roots[idx].iter().map(|&c| c.abs()).sum::<i64>() == 1
    }

    /// All decompositions gamma = alpha + beta into two non-proportional
    /// positive roots, as index pairs (a, b) with a < b.
    pub fn decompositions(&self, gamma_idx: usize) -> Vec<(usize, usize)> {
        let gamma = &self.positive_roots[gamma_idx];
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in (a + 1)..self.len() {
                if a == gamma_idx || b == gamma_idx {
                    continue;
                }
                let sum: Root = self.positive_roots[a]
                    .iter()
                    .zip(&self.positive_roots[b])
                    .map(|(x, y)| x + y)
                    .collect();
                if &sum == gamma && !proportional(&self.positive_roots[a], &self.positive_roots[b])
                {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn proportional(a: &Root, b: &Root) -> bool {
    // both nonzero; proportional iff cross-ratios match
    let mut ratio: Option<(i64, i64)> = None;
    for (&x, &y) in a.iter().zip(b) {
        match (x, y) {
            (0, 0) => continue,
            (0, _) | (_, 0) => return false,
            (x, y) => match ratio {
                None => ratio = Some((x, y)),
                Some((p, q)) => {
                    if x * q != y * p {
                        return false;
                    }
                }
            },
        }
    }
    true
}

/// A normal ordering, stored as a sequence of indices into
/// `RootSystem::positive_roots`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalOrdering {
    pub seq: Vec<usize>,
}

impl NormalOrdering {
    pub fn position(&self, root_idx: usize) -> usize {
        self.seq.iter().position(|&i| i == root_idx).unwrap()
    }
}

/// Check the defining property: every composite root sits strictly between
/// the components of each of its non-proportional decompositions.
pub fn is_normal_ordering(sys: &RootSystem, seq: &[usize]) -> QResult<bool> {
    let n = sys.len();
    if seq.len() != n {
        return Err(QError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &i in seq {
        if i >= n || seen[i] {
            return Err(QError::NotAPermutation);
        }
        seen[i] = true;
    }
    let mut pos = vec![0usize; n];
    for (p, &i) in seq.iter().enumerate() {
        pos[i] = p;
    }
    for g in 0..n {
        for (a, b) in sys.decompositions(g) {
            let (lo, hi) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
            if !(lo < pos[g] && pos[g] < hi) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The elementary inversion kinds, named for the block length they act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    /// two commuting roots
    Pair,
    /// rank-2 A2 block of 3 roots
    TripleA2,
    /// rank-2 B2 block of 4 roots
    QuadB2,
    /// rank-2 G2 block of 6 roots
    SextetG2,
}

impl MoveKind {
    fn from_len(len: usize) -> Option<MoveKind> {
        match len {
            2 => Some(MoveKind::Pair),
            3 => Some(MoveKind::TripleA2),
            4 => Some(MoveKind::QuadB2),
            6 => Some(MoveKind::SextetG2),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InversionMove {
    pub kind: MoveKind,
    pub start: usize,
    pub len: usize,
    pub result: NormalOrdering,
}

/// All elementary inversions applicable to a normal ordering: contiguous
/// blocks that carry the full rank-2 subsystem spanned by their endpoint
/// roots (whose difference is not a root), reversed in place.
pub fn inversion_moves(sys: &RootSystem, ordering: &NormalOrdering) -> QResult<Vec<InversionMove>> {
    if !is_normal_ordering(sys, &ordering.seq)? {
        return Err(QError::NotNormal);
    }
    let n = sys.len();
    let mut out = Vec::new();
    for start in 0..n {
        for len in [2usize, 3, 4, 6] {
            if start + len > n {
                continue;
            }
            let kind = MoveKind::from_len(len).unwrap();
            let window = &ordering.seq[start..start + len];
            let alpha = &sys.positive_roots[window[0]];
            let beta = &sys.positive_roots[window[len - 1]];
            if proportional(alpha, beta) {
                continue;
            }
            // endpoint condition of the theorem: alpha - beta is not a root
            let diff: Root = alpha.iter().zip(beta).map(|(x, y)| x - y).collect();
            if sys.is_root(&diff) {
                continue;
            }
            // window must be exactly the positive span of {alpha, beta}
            let span = positive_span(sys, alpha, beta);
            if span.len() != len {
                continue;
            }
            let wset: BTreeSet<usize> = window.iter().copied().collect();
            if wset != span {
                continue;
            }
            let mut seq = ordering.seq.clone();
            seq[start..start + len].reverse();
            if is_normal_ordering(sys, &seq)? {
                out.push(InversionMove {
                    kind,
                    start,
                    len,
                    result: NormalOrdering { seq },
                });
            }
        }
    }
    Ok(out)
}

/// Indices of all positive roots of the form a*alpha + b*beta (a, b >= 0).
fn positive_span(sys: &RootSystem, alpha: &Root, beta: &Root) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (idx, r) in sys.positive_roots.iter().enumerate() {
        // solve r = a*alpha + b*beta over nonnegative integers, small range
        'search: for a in 0..=6i64 {
            for b in 0..=6i64 {
                if a == 0 && b == 0 {
                    continue;
                }
                let ok = r
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == a * alpha[i] + b * beta[i]);
                if ok {
                    out.insert(idx);
                    break 'search;
                }
            }
        }
    }
    out
}

/// Exhaustively enumerate all normal orderings (incremental pruning: a root
/// may be placed only when exactly one component of each decomposition is
/// already placed).
pub fn enumerate_normal_orderings(sys: &RootSystem) -> QResult<Vec<NormalOrdering>> {
    let n = sys.len();
    if n > 10 {
        return Err(QError::TooLarge(n));
    }
    let decomps: Vec<Vec<(usize, usize)>> = (0..n).map(|g| sys.decompositions(g)).collect();
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    fn rec(
        n: usize,
        decomps: &[Vec<(usize, usize)>],
        seq: &mut Vec<usize>,
        placed: &mut [bool],
        out: &mut Vec<NormalOrdering>,
    ) {
        if seq.len() == n {
            out.push(NormalOrdering { seq: seq.clone() });
            return;
        }
        for r in 0..n {
            if placed[r] {
                continue;
            }
            let ok = decomps[r]
                .iter()
                .all(|&(a, b)| placed[a] ^ placed[b]);
            if !ok {
                continue;
            }
            placed[r] = true;
            seq.push(r);
            rec(n, decomps, seq, placed, out);
            seq.pop();
            placed[r] = false;
        }
    }
    rec(n, &decomps, &mut seq, &mut placed, &mut out);
    out.sort();
    Ok(out)
}

/// Is the inversion-move graph connected on the set of all normal orderings?
pub fn connectivity_check(sys: &RootSystem) -> QResult<bool> {
    let all = enumerate_normal_orderings(sys)?;
    if all.is_empty() {
        return Ok(true);
    }
    let index: HashMap<&NormalOrdering, usize> =
        all.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(0usize);
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        for mv in inversion_moves(sys, &all[i])? {
            let j = *index
                .get(&mv.result)
                .expect("move produced an ordering outside the enumeration");
            if seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    Ok(seen.len() == all.len())
}

/// Move-graph edges as ordering-index pairs, for JSON/DOT export.
pub fn move_graph_edges(sys: &RootSystem) -> QResult<Vec<(usize, usize, MoveKind)>> {
    let all = enumerate_normal_orderings(sys)?;
    let index: HashMap<&NormalOrdering, usize> =
        all.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let mut edges = Vec::new();
    for (i, o) in all.iter().enumerate() {
        for mv in inversion_moves(sys, o)? {
            let j = index[&mv.result];
            if i < j {
                edges.push((i, j, mv.kind));
            }
        }
    }
    Ok(edges)
}

/// One entry of a Cartan-Weyl construction plan: the composite root, the
/// ordered decomposition pair chosen by the minimal-segment rule, and the
/// q-commutator weight (gamma = alpha + beta builds
/// `e_gamma = e_alpha e_beta - q^(alpha,beta) e_beta e_alpha`, and
/// `e_-gamma = e_-beta e_-alpha - q^-(alpha,beta) e_-alpha e_-beta`).
#[derive(Clone, Debug)]
pub struct CWEntry {
    pub gamma: usize,
    pub alpha: usize,
    pub beta: usize,
    /// (alpha, beta) pairing value; the positive-root commutator weight is
    /// q to this power.
    pub weight: Rational64,
}

#[derive(Clone, Debug)]
pub struct CWPlan {
    pub ordering: NormalOrdering,
    /// Entries in ordering position order, composites only.
    pub entries: Vec<CWEntry>,
}

/// Build the construction plan: for each composite root gamma pick the
/// decomposition pair alpha < gamma < beta whose segment [alpha; beta] is
/// minimal (contains no other decomposition pair of gamma); ties broken by
/// smaller width, then leftmost.
pub fn cw_plan(sys: &RootSystem, ordering: &NormalOrdering) -> QResult<CWPlan> {
    if !is_normal_ordering(sys, &ordering.seq)? {
        return Err(QError::NotNormal);
    }
    let mut pos = vec![0usize; sys.len()];
    for (p, &i) in ordering.seq.iter().enumerate() {
        pos[i] = p;
    }
    let mut entries = Vec::new();
    for &g in &ordering.seq {
        let decomps = sys.decompositions(g);
        if decomps.is_empty() {
            continue;
        }
        // orient pairs as (left, right) around gamma
        let mut cands: Vec<(usize, usize)> = decomps
            .iter()
            .map(|&(a, b)| if pos[a] < pos[g] { (a, b) } else { (b, a) })
            .collect();
        // keep segments containing no strictly smaller candidate segment
        let seg = |c: &(usize, usize)| (pos[c.0], pos[c.1]);
        cands.sort_by_key(|c| {
            let (l, r) = seg(c);
            (r - l, l)
        });
        let minimal: Vec<(usize, usize)> = cands
            .iter()
            .filter(|c| {
                let (l, r) = seg(c);
                !cands.iter().any(|d| {
                    let (l2, r2) = seg(d);
                    (l2 > l && r2 <= r) || (l2 >= l && r2 < r)
                })
            })
            .copied()
            .collect();
        let &(alpha, beta) = minimal.first().unwrap_or(&cands[0]);
        let weight = sys.form(&sys.positive_roots[alpha], &sys.positive_roots[beta]);
        entries.push(CWEntry { gamma: g, alpha, beta, weight });
    }
    Ok(CWPlan {
        ordering: ordering.clone(),
        entries,
    })
}

/// The canonical normal ordering used by the Gelfand-Tsetlin realization of
/// A_(n-1): roots gamma_ij in lexicographic (i, j) order, exactly how
/// `positive_roots` lists them.
pub fn canonical_ordering(sys: &RootSystem) -> NormalOrdering {
    NormalOrdering {
        seq: (0..sys.len()).collect(),
    }
}

pub fn root_name(sys: &RootSystem, idx: usize) -> String {
    let r = &sys.positive_roots[idx];
    let mut parts = Vec::new();
    for (i, &c) in r.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c == 1 {
            parts.push(format!("a{}", i + 1));
        } else {
            parts.push(format!("{}a{}", c, i + 1));
        }
    }
    parts.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots() {
        let sys = positive_roots(Kind::A2).unwrap();
        assert_eq!(sys.len(), 3);
        assert!(sys.is_positive_root(&vec![1, 1]));
    }

    #[test]
    fn a1xa1_no_composites() {
        let sys = positive_roots(Kind::A1xA1).unwrap();
        assert_eq!(sys.len(), 2);
        assert!(sys.decompositions(0).is_empty());
        // any permutation normal
        assert!(is_normal_ordering(&sys, &[1, 0]).unwrap());
    }

    #[test]
    fn a3_count() {
        let sys = positive_roots(Kind::A(3)).unwrap();
        assert_eq!(sys.len(), 6);
        // canonical lex ordering is normal
        let ord = canonical_ordering(&sys);
        assert!(is_normal_ordering(&sys, &ord.seq).unwrap());
    }

    #[test]
    fn a2_normality() {
        let sys = positive_roots(Kind::A2).unwrap();
        // alpha1, alpha1+alpha2, alpha2
        assert!(is_normal_ordering(&sys, &[0, 1, 2]).unwrap());
        // composite not between components
        assert!(!is_normal_ordering(&sys, &[0, 2, 1]).unwrap());
        assert!(is_normal_ordering(&sys, &[2, 1, 0]).unwrap());
        assert!(matches!(
            is_normal_ordering(&sys, &[0, 0, 1]),
            Err(QError::NotAPermutation)
        ));
    }

    #[test]
    fn a2_exactly_two_orderings_connected() {
        let sys = positive_roots(Kind::A2).unwrap();
        let all = enumerate_normal_orderings(&sys).unwrap();
        assert_eq!(all.len(), 2);
        assert!(connectivity_check(&sys).unwrap());
        // the single move is the 3-block inversion
        let ord = canonical_ordering(&sys);
        let moves = inversion_moves(&sys, &ord).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::TripleA2);
        assert_eq!(moves[0].result.seq, vec![2, 1, 0]);
    }

    #[test]
    fn a1xa1_pair_move() {
        let sys = positive_roots(Kind::A1xA1).unwrap();
        let ord = NormalOrdering { seq: vec![0, 1] };
        let moves = inversion_moves(&sys, &ord).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::Pair);
        assert_eq!(moves[0].result.seq, vec![1, 0]);
    }

    #[test]
    fn b2_quad_move() {
        let sys = positive_roots(Kind::B2).unwrap();
        // alpha, alpha+beta, alpha+2beta, beta with alpha = [1,0] long
        let ord = NormalOrdering { seq: vec![0, 1, 2, 3] };
        assert!(is_normal_ordering(&sys, &ord.seq).unwrap());
        let moves = inversion_moves(&sys, &ord).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::QuadB2);
    }

    #[test]
    fn moves_are_involutive_and_closed() {
        for kind in [Kind::A2, Kind::B2, Kind::G2, Kind::A(3)] {
            let sys = positive_roots(kind).unwrap();
            for ord in enumerate_normal_orderings(&sys).unwrap() {
                for mv in inversion_moves(&sys, &ord).unwrap() {
                    assert!(is_normal_ordering(&sys, &mv.result.seq).unwrap());
                    // applying the same block reversal again returns
                    let back = inversion_moves(&sys, &mv.result)
                        .unwrap()
                        .into_iter()
                        .find(|m| m.start == mv.start && m.len == mv.len)
                        .expect("inverse move missing");
                    assert_eq!(back.result, ord);
                }
            }
        }
    }

    #[test]
    fn connectivity_small_types() {
        for kind in [Kind::A2, Kind::B2, Kind::G2, Kind::A(3)] {
            let sys = positive_roots(kind).unwrap();
            assert!(connectivity_check(&sys).unwrap(), "{:?}", kind);
        }
    }

    #[test]
    fn g2_uses_sextet_move() {
        let sys = positive_roots(Kind::G2).unwrap();
        let ord = canonical_ordering(&sys);
        assert!(is_normal_ordering(&sys, &ord.seq).unwrap());
        let moves = inversion_moves(&sys, &ord).unwrap();
        assert!(moves.iter().any(|m| m.kind == MoveKind::SextetG2));
    }

    #[test]
    fn boundary_roots_are_simple() {
        for kind in [Kind::A2, Kind::B2, Kind::G2, Kind::A(3), Kind::A(4)] {
            let sys = positive_roots(kind).unwrap();
            for ord in enumerate_normal_orderings(&sys).unwrap() {
                let first = ord.seq[0];
                let last = *ord.seq.last().unwrap();
                assert!(sys.is_simple(first));
                assert!(sys.is_simple(last));
            }
        }
    }

    #[test]
    fn a2_plan_matches_printed_construction() {
        let sys = positive_roots(Kind::A2).unwrap();
        let plan = cw_plan(&sys, &canonical_ordering(&sys)).unwrap();
        assert_eq!(plan.entries.len(), 1);
        let e = &plan.entries[0];
        assert_eq!(sys.positive_roots[e.gamma], vec![1, 1]);
        assert_eq!(sys.positive_roots[e.alpha], vec![1, 0]);
        assert_eq!(sys.positive_roots[e.beta], vec![0, 1]);
        // weight q^(alpha1, alpha2) = q^-1
        assert_eq!(e.weight, Rational64::from(-1));
    }

    #[test]
    fn a3_plan_minimal_segments() {
        let sys = positive_roots(Kind::A(3)).unwrap();
        let plan = cw_plan(&sys, &canonical_ordering(&sys)).unwrap();
        // composites: a1+a2, a1+a2+a3, a2+a3
        assert_eq!(plan.entries.len(), 3);
        for e in &plan.entries {
            // verify minimality: no other decomposition pair inside the segment
            let mut pos = vec![0usize; sys.len()];
            for (p, &i) in plan.ordering.seq.iter().enumerate() {
                pos[i] = p;
            }
            let (l, r) = (pos[e.alpha], pos[e.beta]);
            assert!(l < pos[e.gamma] && pos[e.gamma] < r);
            for (a, b) in sys.decompositions(e.gamma) {
                if (a, b) == (e.alpha.min(e.beta), e.alpha.max(e.beta)) {
                    continue;
                }
                let (l2, r2) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
                // the chosen segment contains no strictly smaller one
                assert!(!(l2 >= l && r2 <= r && (l2, r2) != (l, r)));
            }
        }
    }

    #[test]
    fn a4_enumeration_connected() {
        let sys = positive_roots(Kind::A(4)).unwrap();
        let all = enumerate_normal_orderings(&sys).unwrap();
        assert!(!all.is_empty());
        assert!(connectivity_check(&sys).unwrap());
    }
}

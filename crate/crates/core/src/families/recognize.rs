use std::collections::VecDeque;

use serde::Serialize;

use super::gadget::q_branches;
use super::{Family, FamilyError, OpKind, OperationScript, OperationStep, SiteClass};
use crate::graph::{canonical_form, GraphError, Neighborhood, Tree, VertexId};
use crate::solver::bounds;

/// Membership by the bound equality: `3γ(S(T))` equals the family's numerator.
pub fn recognize_arith(t: &Tree, family: Family) -> Result<bool, FamilyError> {
    let b = bounds(t)?;
    Ok(match family {
        Family::Lower => b.attains_lower,
        Family::Upper => b.attains_upper,
    })
}

/// Result of peeling a tree back to `P_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub family: Family,
    pub accepted: bool,
    /// Construction script; empty when rejected.
    pub script: OperationScript,
    /// The two input vertices left at the end, when accepted.
    pub base: Option<[VertexId; 2]>,
    /// `relabel[v]` is the id input vertex `v` receives when the script is
    /// replayed; empty when rejected.
    pub relabel: Vec<VertexId>,
    /// Why the reduction stopped, when rejected.
    pub rejection: Option<String>,
}

impl ReductionTrace {
    fn rejected(family: Family, reason: String) -> Self {
        ReductionTrace {
            family,
            accepted: false,
            script: OperationScript::default(),
            base: None,
            relabel: Vec::new(),
            rejection: Some(reason),
        }
    }
}

/// One peeled operation, in input ids.
struct Peel {
    kind: OpKind,
    site: VertexId,
    r: Option<usize>,
    /// Removed vertices in the order the forward operation appends them.
    added: Vec<VertexId>,
}

enum Decision {
    Peel(Peel),
    Reject(String),
}

/// The input tree with vertices deleted in place. Ids never change, so the
/// relative order of survivors is the order of a compacted copy.
struct Shrinking {
    adjacency: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    count: usize,
}

impl Neighborhood for Shrinking {
    fn order(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }
}

impl Shrinking {
    fn new(t: &Tree) -> Self {
        Shrinking { adjacency: t.adjacency().to_vec(), alive: vec![true; t.order()], count: t.order() }
    }

    fn remove(&mut self, vs: &[VertexId]) {
        for &v in vs {
            for w in std::mem::take(&mut self.adjacency[v]) {
                self.adjacency[w].retain(|&x| x != v);
            }
            self.alive[v] = false;
            self.count -= 1;
        }
    }

    fn survivors(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    fn bfs(&self, start: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adjacency.len()];
        let mut queue = VecDeque::from([start]);
        dist[start] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Same tie-break as `graph::diametral_path`: the lexicographically
    /// smallest endpoint pair, listed from the smaller endpoint.
    fn diametral_path(&self) -> Vec<VertexId> {
        let first = self.survivors().next().expect("nonempty");
        let farthest = |dist: &[usize]| {
            let reach = |v: &VertexId| dist[*v] != usize::MAX;
            let best = self.survivors().filter(reach).map(|v| dist[v]).max().expect("nonempty");
            self.survivors().find(|&v| dist[v] == best).expect("max exists")
        };
        let x = farthest(&self.bfs(first));
        let from_x = self.bfs(x);
        let y = farthest(&from_x);
        let from_y = self.bfs(y);
        let d = from_x[y];
        let u = self.survivors().find(|&v| from_x[v].max(from_y[v]) == d).expect("x qualifies");
        let from_u = self.bfs(u);
        let w = self.survivors().find(|&v| from_u[v] == d).expect("u is an endpoint");
        let mut path = vec![w];
        let mut cur = w;
        while cur != u {
            cur = *self.adjacency[cur].iter().find(|&&z| from_u[z] + 1 == from_u[cur]).expect("unique predecessor");
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// Class membership of single vertices in a [`Shrinking`] tree, with some
/// extra vertices treated as already gone.
struct View<'a> {
    t: &'a Shrinking,
    gone: &'a [VertexId],
    /// Position (0 or 1, in id order) of the support when the view is `P_2`.
    p2_support: usize,
}

impl View<'_> {
    fn nbrs(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.t.adjacency[v].iter().copied().filter(|w| !self.gone.contains(w))
    }

    fn deg(&self, v: VertexId) -> usize {
        self.nbrs(v).count()
    }

    fn p2(&self) -> Option<[VertexId; 2]> {
        if self.t.count - self.gone.len() != 2 {
            return None;
        }
        let mut pair = self.t.survivors().filter(|v| !self.gone.contains(v));
        Some([pair.next()?, pair.next()?])
    }

    fn is_leaf(&self, v: VertexId) -> bool {
        match self.p2() {
            Some(pair) => v == pair[1 - self.p2_support],
            None => self.deg(v) == 1,
        }
    }

    fn leaf_neighbors(&self, v: VertexId) -> usize {
        match self.p2() {
            Some(pair) => (v == pair[self.p2_support]) as usize,
            None => self.nbrs(v).filter(|&w| self.deg(w) == 1).count(),
        }
    }

    fn is_support(&self, v: VertexId) -> bool {
        self.leaf_neighbors(v) >= 1
    }

    fn is_weak_leaf(&self, v: VertexId) -> bool {
        self.is_leaf(v) && self.nbrs(v).all(|w| self.leaf_neighbors(w) < 2)
    }

    fn is_semi_support(&self, v: VertexId) -> bool {
        !self.is_leaf(v) && !self.is_support(v) && self.nbrs(v).any(|w| self.is_support(w))
    }

    fn is_nss(&self, v: VertexId) -> bool {
        !self.is_semi_support(v) && !self.is_support(v) && self.nbrs(v).any(|w| self.is_semi_support(w))
    }

    fn contains(&self, class: SiteClass, v: VertexId) -> bool {
        match class {
            SiteClass::Support => self.is_support(v),
            SiteClass::SupportOrSemiSupport => self.is_support(v) || self.is_semi_support(v),
            SiteClass::WeakLeaf => self.is_weak_leaf(v),
            SiteClass::SupportOrWeakLeaf => self.is_support(v) || self.is_weak_leaf(v),
        }
    }
}

/// Reduces `t` by reversing family operations until `P_2` remains.
///
/// Each round looks at the diametral path `v_1 .. v_{d+1}` from
/// [`crate::graph::diametral_path`] and peels the structure hanging at its
/// `v_1` end; trees on at most four vertices are settled by table. Every peel
/// is checked against the class its forward operation demands in the smaller
/// tree. When the remainder is `P_2`, both support conventions are tried.
pub fn recognize_structural(t: &Tree, family: Family) -> Result<ReductionTrace, FamilyError> {
    if t.order() < 2 {
        return Err(GraphError::Trivial(t.order()).into());
    }
    let mut cur = Shrinking::new(t);
    let mut peels: Vec<Peel> = Vec::new();
    // position of the final P_2's support within the surviving pair
    let mut p2_support = 0;

    while cur.count > 2 {
        let decision = match family {
            _ if cur.count <= 4 => small_case(&cur, family),
            Family::Lower => lower_round(&cur),
            Family::Upper => upper_round(&cur, t),
        };
        let peel = match decision {
            Decision::Peel(p) => p,
            Decision::Reject(reason) => return Ok(ReductionTrace::rejected(family, reason)),
        };
        cur.remove(&peel.added);
        match legal_site(&cur, peel.kind, peel.site) {
            Some(support) => p2_support = support,
            None => {
                let reason = format!(
                    "reversed {:?} leaves vertex {} outside {} at order {}",
                    peel.kind,
                    t.display(peel.site),
                    peel.kind.site_class(),
                    cur.count
                );
                return Ok(ReductionTrace::rejected(family, reason));
            }
        }
        peels.push(peel);
    }

    // base vertex with the smaller input id becomes replay id 0
    let mut pair = cur.survivors();
    let base = [pair.next().expect("two survivors"), pair.next().expect("two survivors")];
    let mut relabel = vec![usize::MAX; t.order()];
    relabel[base[0]] = 0;
    relabel[base[1]] = 1;
    let mut next = 2;
    let mut steps = Vec::with_capacity(peels.len());
    for peel in peels.iter().rev() {
        steps.push(OperationStep { kind: peel.kind, site: relabel[peel.site], r: peel.r });
        for &v in &peel.added {
            relabel[v] = next;
            next += 1;
        }
    }
    Ok(ReductionTrace {
        family,
        accepted: true,
        script: OperationScript::new(p2_support, steps),
        base: Some(base),
        relabel,
        rejection: None,
    })
}

/// Whether `site` is in the class `kind` demands in `rest`. `Some(s)` carries
/// the `P_2` support position that made it legal (0 when `rest` is larger).
fn legal_site(rest: &Shrinking, kind: OpKind, site: VertexId) -> Option<usize> {
    if kind == OpKind::F3 && rest.count == 2 {
        return None;
    }
    let choices: &[usize] = if rest.count == 2 { &[0, 1] } else { &[0] };
    choices
        .iter()
        .copied()
        .find(|&p2_support| View { t: rest, gone: &[], p2_support }.contains(kind.site_class(), site))
}

/// `P_3`, `P_4` and `K_{1,3}`.
fn small_case(t: &Shrinking, family: Family) -> Decision {
    let center = t
        .survivors()
        .max_by_key(|&v| (t.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty");
    let attach = match family {
        Family::Lower => OpKind::F1,
        Family::Upper => OpKind::O1,
    };
    if t.count == 3 || t.degree(center) == 3 {
        let leaf = *t.neighbors(center).iter().max().expect("center has leaves");
        return Decision::Peel(Peel { kind: attach, site: center, r: None, added: vec![leaf] });
    }
    // P_4
    match family {
        Family::Lower => {
            let path = t.diametral_path();
            Decision::Peel(Peel { kind: OpKind::F2, site: path[2], r: None, added: vec![path[1], path[0]] })
        }
        Family::Upper => Decision::Reject("P_4 is not in the upper family".into()),
    }
}

fn lower_round(t: &Shrinking) -> Decision {
    let path = t.diametral_path();
    let (v1, v2) = (path[0], path[1]);
    if t.degree(v2) >= 3 {
        return Decision::Peel(Peel { kind: OpKind::F1, site: v2, r: None, added: vec![v1] });
    }
    let v3 = path[2];
    if t.degree(v3) >= 3 {
        return Decision::Peel(Peel { kind: OpKind::F2, site: v3, r: None, added: vec![v2, v1] });
    }
    Decision::Peel(Peel { kind: OpKind::F3, site: path[3], r: None, added: vec![v3, v2, v1] })
}

fn upper_round(t: &Shrinking, input: &Tree) -> Decision {
    let whole = View { t, gone: &[], p2_support: 0 };
    let strong_leaf = t
        .survivors()
        .find(|&v| t.degree(v) == 1 && whole.leaf_neighbors(t.neighbors(v)[0]) >= 2);
    if let Some(leaf) = strong_leaf {
        let support = t.neighbors(leaf)[0];
        return Decision::Peel(Peel { kind: OpKind::O1, site: support, r: None, added: vec![leaf] });
    }

    let path = t.diametral_path();
    let (v1, v2, v3) = (path[0], path[1], path[2]);
    let name = |v| input.display(v);
    if t.degree(v2) != 2 {
        return Decision::Reject(format!(
            "v_2 = {} has degree {} with no strong leaves",
            name(v2),
            t.degree(v2)
        ));
    }
    if t.degree(v3) >= 3 {
        return Decision::Reject(format!(
            "v_3 = {} has degree {}, so T is not upper-extremal",
            name(v3),
            t.degree(v3)
        ));
    }
    let v4 = path[3];
    let gone = [v1, v2, v3];
    let rest = View { t, gone: &gone, p2_support: 0 };
    if rest.is_support(v4) || rest.is_weak_leaf(v4) {
        return Decision::Peel(Peel { kind: OpKind::O2, site: v4, r: None, added: vec![v3, v2, v1] });
    }
    if !rest.is_nss(v4) {
        return Decision::Reject(format!(
            "v_4 = {} is a {} after peeling v_1 v_2 v_3",
            name(v4),
            if rest.is_semi_support(v4) { "semi-support" } else { "strong leaf" }
        ));
    }
    // v_4 is the center of a hanging Q_r when rooted at v_{d+1}
    match q_branches(t, v4, Some(path[4])) {
        Some(branches) => Decision::Peel(Peel {
            kind: OpKind::O3,
            site: v4,
            r: Some(branches.len()),
            added: branches.into_iter().flatten().collect(),
        }),
        None => Decision::Reject(format!("the subtree hanging at v_4 = {} is not a Q_r", name(v4))),
    }
}

/// Checks that an accepted trace replays to exactly `t` under `relabel`,
/// with every site legal at its stage.
pub fn verify_trace(t: &Tree, trace: &ReductionTrace) -> Result<bool, FamilyError> {
    if !trace.accepted {
        return Ok(false);
    }
    if trace.script.family().is_some_and(|f| f != trace.family) {
        return Ok(false);
    }
    let rebuilt = trace.script.replay()?;
    let mut seen = vec![false; t.order()];
    let is_perm = trace.relabel.len() == t.order()
        && trace.relabel.iter().all(|&v| v < t.order() && !std::mem::replace(&mut seen[v], true));
    Ok(is_perm
        && rebuilt.adjacency() == t.permuted(&trace.relabel).adjacency()
        && canonical_form(&rebuilt) == canonical_form(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn figure_one() -> Tree {
        Tree::from_edges(7, [(1, 0), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]).unwrap()
    }

    #[test]
    fn p2_is_accepted_by_both() {
        for family in [Family::Lower, Family::Upper] {
            let trace = recognize_structural(&Tree::path(2), family).unwrap();
            assert!(trace.accepted);
            assert!(trace.script.steps.is_empty());
            assert!(verify_trace(&Tree::path(2), &trace).unwrap());
        }
    }

    #[test]
    fn figure_one_upper_has_three_steps() {
        let t = figure_one();
        let trace = recognize_structural(&t, Family::Upper).unwrap();
        assert!(trace.accepted, "{:?}", trace.rejection);
        let kinds: Vec<OpKind> = trace.script.steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![OpKind::O2, OpKind::O1, OpKind::O1]);
        assert!(verify_trace(&t, &trace).unwrap());
        assert!(recognize_arith(&t, Family::Upper).unwrap());

        let lower = recognize_structural(&t, Family::Lower).unwrap();
        assert!(!lower.accepted);
        assert!(!recognize_arith(&t, Family::Lower).unwrap());
    }

    #[test]
    fn small_trees() {
        let p4 = Tree::path(4);
        let trace = recognize_structural(&p4, Family::Lower).unwrap();
        assert!(trace.accepted);
        assert_eq!(trace.script.steps, vec![OperationStep::new(OpKind::F2, trace.script.base_support)]);
        assert!(verify_trace(&p4, &trace).unwrap());
        assert!(!recognize_structural(&p4, Family::Upper).unwrap().accepted);

        for family in [Family::Lower, Family::Upper] {
            for t in [Tree::path(3), Tree::star(3)] {
                let trace = recognize_structural(&t, family).unwrap();
                assert!(verify_trace(&t, &trace).unwrap());
            }
        }
    }

    #[test]
    fn p5_is_o2_on_p2() {
        let p5 = Tree::path(5);
        let trace = recognize_structural(&p5, Family::Upper).unwrap();
        assert_eq!(trace.script.steps.len(), 1);
        assert_eq!(trace.script.steps[0].kind, OpKind::O2);
        assert!(verify_trace(&p5, &trace).unwrap());
        assert!(recognize_arith(&p5, Family::Upper).unwrap());
    }

    #[test]
    fn o3_is_recovered() {
        // strong support 0 plus a P_4 tail whose end carries Q_2; no O3 is
        // ever needed below 14 vertices
        let t = Tree::from_edges(
            14,
            [(0, 1), (0, 2), (0, 3), (0, 4), (0, 13), (4, 5), (5, 6), (6, 7), (6, 10), (7, 8), (8, 9), (10, 11), (11, 12)],
        )
        .unwrap();
        let trace = recognize_structural(&t, Family::Upper).unwrap();
        assert!(trace.accepted, "{:?}", trace.rejection);
        assert!(trace.script.steps.iter().any(|s| *s == OperationStep::q(s.site, 2)));
        assert!(verify_trace(&t, &trace).unwrap());
    }

    #[test]
    fn p2_plus_q2_reduces_through_o2() {
        let t = Tree::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (6, 7)]).unwrap();
        let trace = recognize_structural(&t, Family::Upper).unwrap();
        let kinds: Vec<OpKind> = trace.script.steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![OpKind::O2, OpKind::O2]);
        assert!(verify_trace(&t, &trace).unwrap());
    }

    #[test]
    fn p5_is_not_in_the_lower_family() {
        let trace = recognize_structural(&Tree::path(5), Family::Lower).unwrap();
        assert!(!trace.accepted);
        assert!(!recognize_arith(&Tree::path(5), Family::Lower).unwrap());
    }

    #[test]
    fn p6_is_rejected_by_both() {
        for family in [Family::Lower, Family::Upper] {
            let trace = recognize_structural(&Tree::path(6), family).unwrap();
            assert!(!trace.accepted);
            assert!(trace.rejection.is_some());
            assert!(!recognize_arith(&Tree::path(6), family).unwrap());
        }
    }

    #[test]
    fn tampered_trace_fails_verification() {
        let t = figure_one();
        let mut trace = recognize_structural(&t, Family::Upper).unwrap();
        trace.relabel.swap(0, 3);
        assert!(!verify_trace(&t, &trace).unwrap());
        let other = Tree::try_from(Graph::from_edges(7, (1..7).map(|i| (i - 1, i))).unwrap()).unwrap();
        let trace = recognize_structural(&t, Family::Upper).unwrap();
        assert!(!verify_trace(&other, &trace).unwrap());
    }
}

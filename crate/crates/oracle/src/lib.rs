//! Naive reference evaluator for the `scstar` crate.
//!
//! Everything here is written straight from the definitions, on ordered
//! point sets, with no shared code with the main library. Where a standard
//! identity gives a second route to an operator it is used instead of the
//! library's route:
//!
//! * `cl(A)` = points whose every open neighborhood meets `A`;
//! * `int(A)` = points with an open neighborhood inside `A`;
//! * `scl(A)` = `A ∪ int(cl(A))`;
//! * `αcl(A)` = `A ∪ cl(int(cl(A)))`.
//!
//! Used only from tests.

use std::collections::{BTreeMap, BTreeSet};

pub type Set = BTreeSet<usize>;

/// Alternative readings, mirroring the library's settings.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Readings {
    /// Regularly α-open as `A = α-int(α-cl(A))` instead of the regular-open sandwich.
    pub ralpha_int_cl: bool,
    /// Bound the sandwich by `SC*-cl(I)` instead of `SC*-cl(M)`.
    pub sandwich_closure_of_i: bool,
    /// Only SC*-open sets count as neighborhoods `N` of `f(x)`.
    pub neighborhoods_open_only: bool,
}

impl Readings {
    pub fn literal() -> Self {
        Readings {
            ralpha_int_cl: false,
            sandwich_closure_of_i: true,
            neighborhoods_open_only: true,
        }
    }
}

pub fn set(points: &[usize]) -> Set {
    points.iter().copied().collect()
}

/// Subsets of `0..n` in binary counting order.
pub fn all_subsets(n: usize) -> Vec<Set> {
    (0u32..1 << n)
        .map(|bits| (0..n).filter(|p| bits >> p & 1 == 1).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Space {
    pub n: usize,
    pub opens: Vec<Set>,
}

impl Space {
    pub fn new(n: usize, opens: &[Vec<usize>]) -> Self {
        let mut opens: Vec<Set> = opens.iter().map(|o| set(o)).collect();
        opens.sort();
        opens.dedup();
        Space { n, opens }
    }

    pub fn whole(&self) -> Set {
        (0..self.n).collect()
    }

    pub fn is_topology(&self) -> bool {
        let has = |s: &Set| self.opens.contains(s);
        if !has(&Set::new()) || !has(&self.whole()) {
            return false;
        }
        for a in &self.opens {
            for b in &self.opens {
                if !has(&a.union(b).copied().collect()) || !has(&a.intersection(b).copied().collect()) {
                    return false;
                }
            }
        }
        true
    }

    pub fn complement(&self, a: &Set) -> Set {
        (0..self.n).filter(|p| !a.contains(p)).collect()
    }

    pub fn cl(&self, a: &Set) -> Set {
        (0..self.n)
            .filter(|x| {
                self.opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .all(|o| !o.is_disjoint(a))
            })
            .collect()
    }

    pub fn int(&self, a: &Set) -> Set {
        (0..self.n)
            .filter(|x| self.opens.iter().any(|o| o.contains(x) && o.is_subset(a)))
            .collect()
    }

    pub fn is_open(&self, a: &Set) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: &Set) -> bool {
        self.opens.contains(&self.complement(a))
    }

    /// Opens as sorted point lists, for comparison with the library.
    pub fn open_lists(&self) -> Vec<Vec<usize>> {
        self.opens.iter().map(|o| o.iter().copied().collect()).collect()
    }
}

/// Every topology on `n ≤ 4` points by filtering all families of subsets.
pub fn topologies(n: usize) -> Vec<Space> {
    assert!(n <= 4, "brute-force oracle is limited to 4 points");
    let subsets = all_subsets(n);
    let mut out = Vec::new();
    for bits in 0u64..1 << subsets.len() {
        let opens: Vec<Set> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        let space = Space { n, opens };
        if space.is_topology() {
            out.push(space);
        }
    }
    out
}

fn union(a: &Set, b: &Set) -> Set {
    a.union(b).copied().collect()
}

/// Every class table of one space, computed eagerly from the definitions.
pub struct Oracle {
    pub space: Space,
    pub readings: Readings,
    subsets: Vec<Set>,
    index: BTreeMap<Set, usize>,
    labels: Vec<BTreeSet<&'static str>>,
    families: BTreeMap<&'static str, Vec<Set>>,
    sc_closure: Vec<Set>,
    sc_interior: Vec<Set>,
    semi_closure: Vec<Set>,
    alpha_closure: Vec<Set>,
}

impl Oracle {
    pub fn new(space: Space, readings: Readings) -> Self {
        let subsets = all_subsets(space.n);
        let index: BTreeMap<Set, usize> = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let x = &space;
        let comp = |a: &Set| x.complement(a);

        let scl: Vec<Set> = subsets.iter().map(|a| union(a, &x.int(&x.cl(a)))).collect();
        let acl: Vec<Set> = subsets.iter().map(|a| union(a, &x.cl(&x.int(&x.cl(a))))).collect();
        let semi_open: Vec<bool> = subsets.iter().map(|a| a.is_subset(&x.cl(&x.int(a)))).collect();
        let alpha_open: Vec<bool> = subsets
            .iter()
            .map(|a| a.is_subset(&x.int(&x.cl(&x.int(a)))))
            .collect();
        let c_star_open: Vec<bool> = subsets
            .iter()
            .map(|a| x.int(&x.cl(a)).is_subset(a) && a.is_subset(&x.cl(&x.int(a))))
            .collect();
        let regular_open: Vec<bool> = subsets.iter().map(|a| *a == x.int(&x.cl(a))).collect();
        let regular_closed: Vec<bool> = subsets.iter().map(|a| *a == x.cl(&x.int(a))).collect();

        let ix = |a: &Set| index[a];
        let members = |table: &[bool]| -> Vec<Set> {
            subsets
                .iter()
                .zip(table)
                .filter(|(_, &t)| t)
                .map(|(s, _)| s.clone())
                .collect()
        };
        // "every U in family with A ⊆ U contains bound"
        let trapped = |a: &Set, bound: &Set, family: &[Set]| {
            family.iter().filter(|u| a.is_subset(u)).all(|u| bound.is_subset(u))
        };

        let c_star_family = members(&c_star_open);
        let sc_closed: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| trapped(a, &scl[i], &c_star_family))
            .collect();
        let sc_open: Vec<bool> = subsets.iter().map(|a| sc_closed[ix(&comp(a))]).collect();
        let sc_closed_family = members(&sc_closed);
        let sc_open_family = members(&sc_open);
        let sc_closure: Vec<Set> = subsets
            .iter()
            .map(|a| {
                let mut acc = x.whole();
                for s in sc_closed_family.iter().filter(|s| a.is_subset(s)) {
                    acc = acc.intersection(s).copied().collect();
                }
                acc
            })
            .collect();
        let sc_interior: Vec<Set> = subsets
            .iter()
            .map(|a| {
                sc_open_family
                    .iter()
                    .filter(|u| u.is_subset(a))
                    .fold(Set::new(), |acc, u| union(&acc, u))
            })
            .collect();

        let opens = x.opens.clone();
        let g_closed: Vec<bool> = subsets.iter().map(|a| trapped(a, &x.cl(a), &opens)).collect();
        let gsc_closed: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| trapped(a, &sc_closure[i], &opens))
            .collect();
        let scg_closed: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| trapped(a, &sc_closure[i], &sc_open_family))
            .collect();
        let regular_family = members(&regular_open);
        let regularly_sc_open: Vec<bool> = subsets
            .iter()
            .map(|a| {
                regular_family
                    .iter()
                    .any(|u| u.is_subset(a) && a.is_subset(&sc_closure[ix(u)]))
            })
            .collect();
        let rsc_family = members(&regularly_sc_open);
        let rgsc_closed: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| trapped(a, &sc_closure[i], &rsc_family))
            .collect();
        let alpha_family = members(&alpha_open);
        let g_alpha_closed: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| trapped(a, &acl[i], &alpha_family))
            .collect();
        let alpha_int = |a: &Set| comp(&acl[ix(&comp(a))]);
        let regularly_alpha_open: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if readings.ralpha_int_cl {
                    *a == alpha_int(&acl[i])
                } else {
                    regular_family
                        .iter()
                        .any(|u| u.is_subset(a) && a.is_subset(&acl[ix(u)]))
                }
            })
            .collect();
        let ra_family = members(&regularly_alpha_open);
        let rg_alpha_closed: Vec<bool> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| trapped(a, &acl[i], &ra_family))
            .collect();

        let labels: Vec<BTreeSet<&'static str>> = subsets
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let c = ix(&comp(a));
                let pairs: [(&'static str, bool); 26] = [
                    ("Open", x.is_open(a)),
                    ("Closed", x.is_closed(a)),
                    ("RegularOpen", regular_open[i]),
                    ("RegularClosed", regular_closed[i]),
                    ("SemiOpen", semi_open[i]),
                    ("SemiClosed", semi_open[c]),
                    ("AlphaOpen", alpha_open[i]),
                    ("AlphaClosed", alpha_open[c]),
                    ("GAlphaClosed", g_alpha_closed[i]),
                    ("GAlphaOpen", g_alpha_closed[c]),
                    ("RGAlphaClosed", rg_alpha_closed[i]),
                    ("RGAlphaOpen", rg_alpha_closed[c]),
                    ("CStarOpen", c_star_open[i]),
                    ("CStarClosed", c_star_open[c]),
                    ("SCStarOpen", sc_open[i]),
                    ("SCStarClosed", sc_closed[i]),
                    ("GClosed", g_closed[i]),
                    ("GOpen", g_closed[c]),
                    ("GSCStarClosed", gsc_closed[i]),
                    ("GSCStarOpen", gsc_closed[c]),
                    ("SCStarGClosed", scg_closed[i]),
                    ("SCStarGOpen", scg_closed[c]),
                    ("RegularlySCStarOpen", regularly_sc_open[i]),
                    ("RegularlySCStarClosed", regularly_sc_open[c]),
                    ("RGSCStarClosed", rgsc_closed[i]),
                    ("RGSCStarOpen", rgsc_closed[c]),
                ];
                pairs.iter().filter(|(_, v)| *v).map(|(k, _)| *k).collect()
            })
            .collect();

        let mut families: BTreeMap<&'static str, Vec<Set>> = BTreeMap::new();
        for (a, names) in subsets.iter().zip(&labels) {
            for name in names {
                families.entry(*name).or_default().push(a.clone());
            }
        }

        Oracle {
            space,
            readings,
            subsets,
            index,
            labels,
            families,
            sc_closure,
            sc_interior,
            semi_closure: scl,
            alpha_closure: acl,
        }
    }

    pub fn subsets(&self) -> &[Set] {
        &self.subsets
    }

    pub fn labels(&self, a: &Set) -> &BTreeSet<&'static str> {
        &self.labels[self.index[a]]
    }

    pub fn has(&self, label: &str, a: &Set) -> bool {
        self.labels(a).contains(label)
    }

    pub fn family(&self, label: &str) -> &[Set] {
        self.families.get(label).map_or(&[], Vec::as_slice)
    }

    pub fn sc_closure(&self, a: &Set) -> &Set {
        &self.sc_closure[self.index[a]]
    }

    pub fn sc_interior(&self, a: &Set) -> &Set {
        &self.sc_interior[self.index[a]]
    }

    pub fn semi_closure(&self, a: &Set) -> &Set {
        &self.semi_closure[self.index[a]]
    }

    pub fn alpha_closure(&self, a: &Set) -> &Set {
        &self.alpha_closure[self.index[a]]
    }

    fn separable(&self, a: &Set, b: &Set, kind: &str) -> bool {
        let family = self.family(kind);
        family.iter().any(|u| {
            a.is_subset(u)
                && family
                    .iter()
                    .any(|v| b.is_subset(v) && u.is_disjoint(v))
        })
    }

    fn pairs_separable(&self, left: &str, right: &str, kind: &str) -> bool {
        for a in self.family(left) {
            for b in self.family(right) {
                if a.is_disjoint(b) && !self.separable(a, b, kind) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_normal(&self) -> bool {
        self.pairs_separable("Closed", "Closed", "Open")
    }

    pub fn is_almost_normal(&self) -> bool {
        self.pairs_separable("Closed", "RegularClosed", "Open")
    }

    pub fn is_almost_sc_normal(&self) -> bool {
        self.pairs_separable("Closed", "RegularClosed", "SCStarOpen")
    }

    fn sandwich_holds(&self, kind: &str) -> bool {
        for i in self.family("Closed") {
            for j in self.family("RegularOpen") {
                if !i.is_subset(j) {
                    continue;
                }
                let found = self.family(kind).iter().any(|m| {
                    let bound = if self.readings.sandwich_closure_of_i {
                        self.sc_closure(i)
                    } else {
                        self.sc_closure(m)
                    };
                    i.is_subset(m) && m.is_subset(bound) && bound.is_subset(j)
                });
                if !found {
                    return false;
                }
            }
        }
        true
    }

    pub fn theorem24(&self) -> [bool; 6] {
        let one = self.is_almost_sc_normal();
        [
            one,
            self.pairs_separable("Closed", "RegularClosed", "GSCStarOpen"),
            self.pairs_separable("Closed", "RegularClosed", "RGSCStarOpen"),
            self.sandwich_holds("GSCStarOpen"),
            self.sandwich_holds("RGSCStarOpen"),
            self.pairs_separable("RegularClosed", "Closed", "SCStarOpen")
                && self.pairs_separable("Closed", "RegularClosed", "SCStarOpen"),
        ]
    }

    pub fn lemma23(&self, a: &Set) -> (bool, bool) {
        let left = self.has("RGSCStarOpen", a);
        let interior = self.sc_interior(a);
        let right = self
            .family("RegularClosed")
            .iter()
            .filter(|f| f.is_subset(a))
            .all(|f| f.is_subset(interior));
        (left, right)
    }

    fn sc_neighborhood(&self, n: &Set, p: usize) -> bool {
        self.family("SCStarOpen")
            .iter()
            .any(|u| u.contains(&p) && u.is_subset(n))
    }
}

/// A map between two oracle spaces.
pub struct Map<'a> {
    pub domain: &'a Oracle,
    pub codomain: &'a Oracle,
    pub assignment: &'a [usize],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    NotApplicable,
    Counterexample,
}

impl Map<'_> {
    pub fn image(&self, a: &Set) -> Set {
        a.iter().map(|&p| self.assignment[p]).collect()
    }

    pub fn preimage(&self, b: &Set) -> Set {
        (0..self.assignment.len())
            .filter(|&p| b.contains(&self.assignment[p]))
            .collect()
    }

    pub fn surjective(&self) -> bool {
        (0..self.codomain.space.n).all(|q| self.assignment.contains(&q))
    }

    pub fn continuous(&self) -> bool {
        self.codomain
            .space
            .opens
            .iter()
            .all(|o| self.domain.space.is_open(&self.preimage(o)))
    }

    pub fn rc_continuous(&self) -> bool {
        self.codomain
            .family("RegularClosed")
            .iter()
            .all(|f| self.domain.has("RegularClosed", &self.preimage(f)))
    }

    pub fn t_sc_open(&self) -> bool {
        self.domain
            .family("SCStarOpen")
            .iter()
            .all(|a| self.codomain.has("SCStarOpen", &self.image(a)))
    }

    pub fn t_sc_closed(&self) -> bool {
        self.domain
            .family("SCStarClosed")
            .iter()
            .all(|a| self.codomain.has("SCStarClosed", &self.image(a)))
    }

    pub fn almost_irresolute(&self) -> bool {
        for x in 0..self.assignment.len() {
            let fx = self.assignment[x];
            for n in self.codomain.subsets() {
                let is_nbhd = if self.domain.readings.neighborhoods_open_only {
                    n.contains(&fx) && self.codomain.has("SCStarOpen", n)
                } else {
                    self.codomain.sc_neighborhood(n, fx)
                };
                if is_nbhd {
                    let cl = self.domain.sc_closure(&self.preimage(n));
                    if !self.domain.sc_neighborhood(cl, x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn conclude(&self, hypotheses: bool) -> Verdict {
        if !hypotheses {
            Verdict::NotApplicable
        } else if self.codomain.is_almost_sc_normal() {
            Verdict::Holds
        } else {
            Verdict::Counterexample
        }
    }

    pub fn open_map_verdict(&self) -> Verdict {
        self.conclude(
            self.surjective()
                && self.continuous()
                && self.t_sc_open()
                && self.rc_continuous()
                && self.almost_irresolute()
                && self.domain.is_almost_sc_normal(),
        )
    }

    pub fn closed_map_verdict(&self) -> Verdict {
        self.conclude(
            self.surjective() && self.rc_continuous() && self.t_sc_closed() && self.domain.is_almost_sc_normal(),
        )
    }
}

/// One hit of a claim: the space, the subset or the map involved.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Finding {
    pub n: usize,
    pub opens: Vec<Vec<usize>>,
    pub subset: Option<Vec<usize>>,
    pub codomain: Option<(usize, Vec<Vec<usize>>)>,
    pub assignment: Option<Vec<usize>>,
}

fn implies(p: bool, q: bool) -> bool {
    !p || q
}

/// Subset-level hit for the claim with the given registry id.
pub fn subset_hit(claim: &str, o: &Oracle, a: &Set) -> bool {
    let h = |l: &str| o.has(l, a);
    match claim {
        "C1" => !implies(h("Closed"), h("SCStarClosed")),
        "C2a" => !implies(h("SCStarClosed"), h("GSCStarClosed")),
        "C2b" => !implies(h("GSCStarClosed"), h("SCStarClosed")),
        "C3a" => !implies(h("GSCStarClosed"), h("SCStarGClosed")),
        "C3b" => !implies(h("SCStarGClosed"), h("GSCStarClosed")),
        "C4" => !implies(h("Closed"), h("GClosed")),
        "C5a" => !implies(h("Closed"), h("AlphaClosed")),
        "C5b" => !implies(h("AlphaClosed"), h("GAlphaClosed")),
        "C5c" => !implies(h("GAlphaClosed"), h("RGAlphaClosed")),
        "C6a" => !implies(h("AlphaClosed"), h("SCStarClosed")),
        "C6b" => !implies(h("GAlphaClosed"), h("GSCStarClosed")),
        "C6c" => !implies(h("RGAlphaClosed"), h("RGSCStarClosed")),
        "C8" => {
            let (l, r) = o.lemma23(a);
            l != r
        }
        "P1" => !o.has("SCStarClosed", o.sc_closure(a)),
        "P2" => o.sc_closure(o.sc_closure(a)) != o.sc_closure(a),
        "X1" => h("SCStarClosed") && !h("Closed"),
        "X2" => h("GClosed") && !h("Closed"),
        other => panic!("{other} is not a subset claim"),
    }
}

pub fn space_hit(claim: &str, o: &Oracle) -> bool {
    match claim {
        "C7a" => o.is_normal() && !o.is_almost_normal(),
        "C7b" => o.is_almost_normal() && !o.is_almost_sc_normal(),
        "C9" => {
            let t = o.theorem24();
            t.iter().any(|&c| c != t[0])
        }
        "X3" => o.is_almost_sc_normal() && !o.is_almost_normal(),
        "X4" => o.is_almost_normal() && !o.is_normal(),
        other => panic!("{other} is not a space claim"),
    }
}

pub fn is_map_claim(claim: &str) -> bool {
    matches!(claim, "C10" | "C11")
}

pub fn is_space_claim(claim: &str) -> bool {
    matches!(claim, "C7a" | "C7b" | "C9" | "X3" | "X4")
}

fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = m.pow(n as u32);
    for code in 0..total {
        let mut a = vec![0; n];
        let mut c = code;
        for slot in a.iter_mut().rev() {
            *slot = c % m;
            c /= m;
        }
        if (0..m).all(|q| a.contains(&q)) {
            out.push(a);
        }
    }
    out
}

/// Oracles for every space with `1..=max_points` points.
pub fn oracles(max_points: usize, readings: Readings) -> Vec<Oracle> {
    (1..=max_points)
        .flat_map(topologies)
        .map(|s| Oracle::new(s, readings))
        .collect()
}

/// Every hit of `claim` over all spaces with `1..=max_points` points.
pub fn findings(claim: &str, max_points: usize, readings: Readings) -> Vec<Finding> {
    findings_in(claim, &oracles(max_points, readings))
}

/// Every hit of `claim` over the given spaces; maps run between all pairs.
pub fn findings_in(claim: &str, oracles: &[Oracle]) -> Vec<Finding> {
    let mut out = Vec::new();
    for o in oracles {
        let base = Finding {
            n: o.space.n,
            opens: o.space.open_lists(),
            subset: None,
            codomain: None,
            assignment: None,
        };
        if is_map_claim(claim) {
            for cod in oracles.iter().filter(|c| c.space.n <= o.space.n) {
                for assignment in surjections(o.space.n, cod.space.n) {
                    let f = Map {
                        domain: o,
                        codomain: cod,
                        assignment: &assignment,
                    };
                    let verdict = if claim == "C10" {
                        f.open_map_verdict()
                    } else {
                        f.closed_map_verdict()
                    };
                    if verdict == Verdict::Counterexample {
                        out.push(Finding {
                            codomain: Some((cod.space.n, cod.space.open_lists())),
                            assignment: Some(assignment.clone()),
                            ..base.clone()
                        });
                    }
                }
            }
        } else if is_space_claim(claim) {
            if space_hit(claim, o) {
                out.push(base);
            }
        } else {
            for a in o.subsets() {
                if subset_hit(claim, o, a) {
                    out.push(Finding {
                        subset: Some(a.iter().copied().collect()),
                        ..base.clone()
                    });
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| topologies(n).len()).collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn closure_routes() {
        let x = Space::new(4, &[vec![], vec![1, 3], vec![0, 1, 3], vec![1, 2, 3], vec![0, 1, 2, 3]]);
        assert_eq!(x.cl(&set(&[1])), set(&[0, 1, 2, 3]));
        assert_eq!(x.cl(&set(&[0])), set(&[0]));
        assert_eq!(x.int(&set(&[1])), set(&[]));
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(3, 2).len(), 6);
        assert_eq!(surjections(2, 2).len(), 2);
        assert!(surjections(1, 2).is_empty());
    }
}

//! Brute-force ground truth: enumerate the nested set complex of a
//! building set, derive the f-polynomial of the associated polytope, and
//! the oracle gamma-polynomial.
//!
//! A nested set is a subfamily of B minus its maximal elements whose
//! members are pairwise nested or disjoint, and in which no union of two
//! or more disjoint members lies in B.

use crate::buildset::{BuildingSet, Subset};
use crate::error::{Error, Result};
use crate::poly::{f_to_h, h_to_gamma, IntPolynomial};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Number of candidate elements above which enumeration refuses to run
/// without an explicit override.
pub const DEFAULT_CANDIDATE_CAP: usize = 1 << 20;

/// Graded face counts: counts_by_size[k] = number of nested sets of
/// cardinality k; the length is dimension + 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceCensus {
    counts_by_size: Vec<u64>,
}

impl FaceCensus {
    pub fn counts(&self) -> &[u64] {
        &self.counts_by_size
    }

    pub fn dimension(&self) -> usize {
        self.counts_by_size.len() - 1
    }

    /// Maximal nested sets correspond to the vertices of the polytope.
    pub fn vertex_count(&self) -> u64 {
        *self.counts_by_size.last().expect("census is never empty")
    }
}

struct Enumerator<'a> {
    candidates: Vec<Subset>,
    members: HashSet<u64>,
    stack: Vec<Subset>,
    visitor: &'a mut dyn FnMut(&[Subset]),
}

impl Enumerator<'_> {
    fn admissible(&self, c: Subset) -> bool {
        // condition 1: pairwise nested or disjoint
        for &m in &self.stack {
            if m.intersects(c) && !m.is_subset_of(c) && !c.is_subset_of(m) {
                return false;
            }
        }
        // condition 2: no union of >= 2 disjoint members (including c) in
        // B. Any violating collection lifts to one whose members besides c
        // are inclusion-maximal in the stack and disjoint from c, so only
        // those need to be combined.
        let mut maximal_disjoint: Vec<Subset> = Vec::new();
        for (k, &m) in self.stack.iter().enumerate() {
            if m.intersects(c) {
                continue;
            }
            let is_maximal = self
                .stack
                .iter()
                .enumerate()
                .all(|(j, &other)| j == k || !m.is_proper_subset_of(other));
            if is_maximal {
                maximal_disjoint.push(m);
            }
        }
        !self.some_union_in_b(c, &maximal_disjoint)
    }

    /// Whether c together with some nonempty sub-collection of `rest`
    /// unions to a member of B.
    fn some_union_in_b(&self, acc: Subset, rest: &[Subset]) -> bool {
        for (k, &m) in rest.iter().enumerate() {
            let u = acc.union(m);
            if self.members.contains(&u.bits()) || self.some_union_in_b(u, &rest[k + 1..]) {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, start: usize) {
        for idx in start..self.candidates.len() {
            let c = self.candidates[idx];
            if self.admissible(c) {
                self.stack.push(c);
                (self.visitor)(&self.stack);
                self.dfs(idx + 1);
                self.stack.pop();
            }
        }
    }
}

/// Enumerates every nested set of `b` (including the empty one) in
/// canonical depth-first order, calling the visitor on each.
pub fn visit_nested_sets(b: &BuildingSet, visitor: &mut dyn FnMut(&[Subset])) {
    let b_max: HashSet<u64> = b.b_max().iter().map(|s| s.bits()).collect();
    let candidates: Vec<Subset> = b
        .elements()
        .iter()
        .copied()
        .filter(|e| !b_max.contains(&e.bits()))
        .collect();
    let members: HashSet<u64> = b.elements().iter().map(|s| s.bits()).collect();
    let mut en = Enumerator { candidates, members, stack: Vec::new(), visitor };
    (en.visitor)(&[]);
    en.dfs(0);
}

fn census_with_cap(b: &BuildingSet, cap: Option<usize>) -> Result<FaceCensus> {
    let candidate_count = b.len() - b.b_max().len();
    if let Some(cap) = cap {
        if candidate_count > cap {
            return Err(Error::CapExceeded(format!(
                "{candidate_count} candidate elements exceed the cap of {cap}"
            )));
        }
    }
    let d = b.dimension();
    let mut counts = vec![0u64; d + 1];
    let mut overflow = false;
    visit_nested_sets(b, &mut |members| {
        if members.len() > d {
            overflow = true;
        } else {
            counts[members.len()] += 1;
        }
    });
    if overflow {
        return Err(Error::Internal(
            "nested set larger than the polytope dimension".into(),
        ));
    }
    Ok(FaceCensus { counts_by_size: counts })
}

/// Exact nested-set counts by cardinality. Refuses instances with more
/// than 2^20 candidate elements; use [`enumerate_nested_sets_uncapped`]
/// to override.
pub fn enumerate_nested_sets(b: &BuildingSet) -> Result<FaceCensus> {
    census_with_cap(b, Some(DEFAULT_CANDIDATE_CAP))
}

pub fn enumerate_nested_sets_uncapped(b: &BuildingSet) -> Result<FaceCensus> {
    census_with_cap(b, None)
}

/// Turns graded nested-set counts into the f-polynomial and dimension.
pub fn f_polynomial_from_census(census: &FaceCensus) -> Result<(IntPolynomial, usize)> {
    let d = census.dimension();
    let coeffs: Vec<i64> = (0..=d)
        .map(|k| {
            i64::try_from(census.counts()[d - k])
                .map_err(|_| Error::Internal("face count exceeds i64".into()))
        })
        .collect::<Result<_>>()?;
    Ok((IntPolynomial::from_coeffs(coeffs), d))
}

/// The f-polynomial of the polytope of `b` and its dimension: a face of
/// dimension k corresponds to a nested set of cardinality d - k.
pub fn f_polynomial(b: &BuildingSet) -> Result<(IntPolynomial, usize)> {
    f_polynomial_from_census(&enumerate_nested_sets(b)?)
}

pub fn f_polynomial_uncapped(b: &BuildingSet) -> Result<(IntPolynomial, usize)> {
    f_polynomial_from_census(&enumerate_nested_sets_uncapped(b)?)
}

/// Ground-truth gamma-polynomial through the full f -> h -> gamma
/// pipeline. Every gamma claim in the crate is checked against this.
pub fn gamma_oracle(b: &BuildingSet) -> Result<IntPolynomial> {
    let (f, d) = f_polynomial(b)?;
    let h = f_to_h(&f, d)?;
    h_to_gamma(&h, d)
}

pub fn gamma_oracle_uncapped(b: &BuildingSet) -> Result<IntPolynomial> {
    let (f, d) = f_polynomial_uncapped(b)?;
    let h = f_to_h(&f, d)?;
    h_to_gamma(&h, d)
}

/// Checks the facet face-count identity: the graded count of nested sets
/// containing `i` must equal the size convolution of the censuses of the
/// restriction to i and the contraction by i.
pub fn facet_f_identity_check(b: &BuildingSet, i: Subset) -> Result<bool> {
    if !b.contains(i) || b.b_max().contains(&i) {
        return Err(Error::Domain(format!(
            "facet check needs a non-maximal member, got {i}"
        )));
    }
    let d = b.dimension();
    let mut with_i = vec![0u64; d + 1];
    visit_nested_sets(b, &mut |members| {
        if members.contains(&i) {
            with_i[members.len()] += 1;
        }
    });
    let restr = enumerate_nested_sets(&b.restriction(i)?)?;
    let contr = enumerate_nested_sets(&b.contraction(i)?)?;
    let mut conv = vec![0u64; restr.counts().len() + contr.counts().len() - 1];
    for (a, &x) in restr.counts().iter().enumerate() {
        for (c, &y) in contr.counts().iter().enumerate() {
            conv[a + c] += x * y;
        }
    }
    // a nested set containing i of size k pairs i with k-1 product faces
    let lhs_matches = (1..=d).all(|k| with_i[k] == conv.get(k - 1).copied().unwrap_or(0));
    let no_extra = conv.iter().skip(d).all(|&x| x == 0);
    Ok(lhs_matches && no_extra && with_i[0] == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buildset::graphical_building_set;
    use crate::moves::LabeledGraph;

    fn b_of(g: &LabeledGraph) -> BuildingSet {
        graphical_building_set(g).unwrap()
    }

    fn sub(labels: &[usize]) -> Subset {
        Subset::from_labels(labels).unwrap()
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn census_path2() {
        let census = enumerate_nested_sets(&b_of(&LabeledGraph::path(2))).unwrap();
        assert_eq!(census.counts(), &[1, 2]);
    }

    #[test]
    fn census_path3_pentagon() {
        let census = enumerate_nested_sets(&b_of(&LabeledGraph::path(3))).unwrap();
        assert_eq!(census.counts(), &[1, 5, 5]);
        assert_eq!(census.vertex_count(), 5);
    }

    #[test]
    fn census_point() {
        let census = enumerate_nested_sets(&b_of(&LabeledGraph::new(1))).unwrap();
        assert_eq!(census.counts(), &[1]);
    }

    #[test]
    fn f_polynomial_examples() {
        let (f, d) = f_polynomial(&b_of(&LabeledGraph::path(3))).unwrap();
        assert_eq!((f, d), (poly(&[5, 5, 1]), 2));
        let (f, d) = f_polynomial(&b_of(&LabeledGraph::path(2))).unwrap();
        assert_eq!((f, d), (poly(&[2, 1]), 1));
        let (f, d) = f_polynomial(&b_of(&LabeledGraph::complete(3))).unwrap();
        assert_eq!((f, d), (poly(&[6, 6, 1]), 2), "hexagon");
    }

    #[test]
    fn gamma_oracle_examples() {
        assert_eq!(gamma_oracle(&b_of(&LabeledGraph::path(2))).unwrap(), poly(&[1]));
        assert_eq!(gamma_oracle(&b_of(&LabeledGraph::path(3))).unwrap(), poly(&[1, 1]));
        assert_eq!(gamma_oracle(&b_of(&LabeledGraph::complete(3))).unwrap(), poly(&[1, 2]));
    }

    #[test]
    fn facet_identity_examples() {
        let b = b_of(&LabeledGraph::path(3));
        assert!(facet_f_identity_check(&b, sub(&[1, 2])).unwrap());
        assert!(facet_f_identity_check(&b, sub(&[2])).unwrap());
        let k3 = b_of(&LabeledGraph::complete(3));
        assert!(facet_f_identity_check(&k3, sub(&[1, 3])).unwrap());
        assert!(facet_f_identity_check(&b, sub(&[1, 2, 3])).is_err(), "maximal member");
    }

    #[test]
    fn disconnected_graph_gamma_is_product() {
        // two disjoint edges: product of two segments
        let g = LabeledGraph::with_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(gamma_oracle(&b_of(&g)).unwrap(), poly(&[1]));
        let (f, d) = f_polynomial(&b_of(&g)).unwrap();
        assert_eq!(d, 2);
        assert_eq!(f, poly(&[4, 4, 1]), "square = segment x segment");
    }
}

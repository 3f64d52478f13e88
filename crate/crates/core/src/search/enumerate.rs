//! Enumeration of labeled finite topologies and of maps between spaces.

use std::collections::BTreeSet;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::maps::SpaceMap;
use crate::space::{full_mask, validate_topology, FiniteSpace, SetFamily};

/// Largest `n` for [`Method::Brute`] (2^(2^n) candidate families).
pub const MAX_BRUTE_POINTS: usize = 4;
/// Largest `n` for [`Method::Preorder`].
pub const MAX_PREORDER_POINTS: usize = 5;
/// Largest domain or codomain size for map enumeration.
pub const MAX_MAP_POINTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Filter every family of subsets through the topology axioms.
    Brute,
    /// Up-sets of every preorder on the points.
    #[default]
    Preorder,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::Brute),
            "preorder" => Ok(Method::Preorder),
            other => Err(format!("unknown enumeration method {other:?}")),
        }
    }
}

/// Every labeled topology on `n` points, once each, in canonical order.
pub fn enumerate_topologies(n: usize, method: Method) -> Result<Vec<FiniteSpace>> {
    let max = match method {
        Method::Brute => MAX_BRUTE_POINTS,
        Method::Preorder => MAX_PREORDER_POINTS,
    };
    if n == 0 {
        return Err(Error::EmptyGround);
    }
    if n > max {
        return Err(Error::SizeTooLarge { size: n, max });
    }
    let mut spaces = match method {
        Method::Brute => brute(n),
        Method::Preorder => from_preorders(n),
    };
    spaces.sort();
    Ok(spaces)
}

/// All labeled topologies with `1..=max_points` points, smallest first.
pub fn enumerate_up_to(max_points: usize, method: Method) -> Result<Vec<FiniteSpace>> {
    let mut out = Vec::new();
    for n in 1..=max_points {
        out.extend(enumerate_topologies(n, method)?);
    }
    Ok(out)
}

fn brute(n: usize) -> Vec<FiniteSpace> {
    let subsets = 1u32 << n;
    (0..1u64 << subsets)
        .filter_map(|bits| {
            let masks = (0..subsets).filter(|&m| bits & (1 << m) != 0);
            let family = SetFamily::from_masks_unchecked(n, masks);
            validate_topology(n, &family).ok()
        })
        .collect()
}

fn from_preorders(n: usize) -> Vec<FiniteSpace> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        // up[i]: mask of points j with i ≤ j
        let mut up: Vec<u32> = (0..n).map(|i| 1 << i).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits & (1 << k) != 0 {
                up[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n)
                .filter(|&j| up[i] & (1 << j) != 0)
                .all(|j| up[j] & !up[i] == 0)
        });
        if !transitive {
            continue;
        }
        let opens = (0..=full_mask(n)).filter(|&u| {
            (0..n)
                .filter(|&i| u & (1 << i) != 0)
                .all(|i| up[i] & !u == 0)
        });
        out.push(FiniteSpace::from_family_unchecked(
            n,
            SetFamily::from_masks_unchecked(n, opens),
        ));
    }
    out
}

fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    perm.iter()
        .enumerate()
        .filter(|&(p, _)| mask & (1 << p) != 0)
        .fold(0, |acc, (_, &q)| acc | (1 << q))
}

/// Smallest sorted open-mask list over all relabelings of the points.
/// Two spaces are homeomorphic iff their canonical forms are equal.
pub fn canonical_form(space: &FiniteSpace) -> Vec<u32> {
    let n = space.size();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut masks: Vec<u32> = space.opens().masks().map(|m| permute_mask(m, &perm)).collect();
            masks.sort_unstable();
            masks
        })
        .min()
        .unwrap_or_default()
}

/// First representative of each homeomorphism class, input order preserved.
pub fn up_to_homeomorphism(spaces: &[FiniteSpace]) -> Vec<FiniteSpace> {
    let mut seen = BTreeSet::new();
    spaces
        .iter()
        .filter(|s| seen.insert((s.size(), canonical_form(s))))
        .cloned()
        .collect()
}

/// All assignments `0..domain → 0..codomain`, first point most significant.
pub fn assignments(domain: usize, codomain: usize, surjective_only: bool) -> Result<Vec<Vec<usize>>> {
    for size in [domain, codomain] {
        if size > MAX_MAP_POINTS {
            return Err(Error::SizeTooLarge {
                size,
                max: MAX_MAP_POINTS,
            });
        }
    }
    let all = (0..domain)
        .map(|_| 0..codomain)
        .multi_cartesian_product()
        .filter(|a| !surjective_only || (0..codomain).all(|q| a.contains(&q)));
    if domain == 0 {
        return Ok(vec![Vec::new()]);
    }
    Ok(all.collect())
}

/// All maps between two spaces, optionally surjections only.
pub fn enumerate_maps(x: &FiniteSpace, y: &FiniteSpace, surjective_only: bool) -> Result<Vec<SpaceMap>> {
    assignments(x.size(), y.size(), surjective_only)?
        .into_iter()
        .map(|a| SpaceMap::new(x.clone(), y.clone(), a))
        .collect()
}

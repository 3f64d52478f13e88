//! Finite topological spaces and the two primitive operators.
//!
//! Points are the indices `0..size`. A subset is stored as its characteristic
//! bit mask (point `p` contributes `1 << p`), which also fixes the canonical
//! order used everywhere in the crate: subsets compare by their mask value.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set the library accepts.
pub const MAX_POINTS: usize = 16;

/// A subset of `0..ground_size`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    mask: u32,
    ground_size: u8,
}

impl PointSet {
    pub fn empty(ground_size: usize) -> Self {
        Self::from_mask_unchecked(0, ground_size)
    }

    pub fn full(ground_size: usize) -> Self {
        Self::from_mask_unchecked(full_mask(ground_size), ground_size)
    }

    pub fn from_mask(mask: u32, ground_size: usize) -> Result<Self> {
        check_ground(ground_size)?;
        if mask & !full_mask(ground_size) != 0 {
            let point = 31 - (mask & !full_mask(ground_size)).leading_zeros() as usize;
            return Err(Error::PointOutOfRange {
                point,
                size: ground_size,
            });
        }
        Ok(Self::from_mask_unchecked(mask, ground_size))
    }

    pub fn from_points<I>(points: I, ground_size: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        check_ground(ground_size)?;
        let mut mask = 0u32;
        for p in points {
            if p >= ground_size {
                return Err(Error::PointOutOfRange {
                    point: p,
                    size: ground_size,
                });
            }
            mask |= 1 << p;
        }
        Ok(Self::from_mask_unchecked(mask, ground_size))
    }

    pub(crate) fn from_mask_unchecked(mask: u32, ground_size: usize) -> Self {
        debug_assert!(ground_size <= MAX_POINTS);
        debug_assert_eq!(mask & !full_mask(ground_size), 0);
        PointSet {
            mask,
            ground_size: ground_size as u8,
        }
    }

    /// Characteristic encoding; also the canonical sort key.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == full_mask(self.ground_size())
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.ground_size() && self.mask & (1 << point) != 0
    }

    pub fn points(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ground_size()).filter(move |&p| self.mask & (1 << p) != 0)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.mask & other.mask == 0
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.ground_size, other.ground_size);
        PointSet { mask: self.mask | other.mask, ..*self }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.ground_size, other.ground_size);
        PointSet { mask: self.mask & other.mask, ..*self }
    }

    pub fn complement(&self) -> PointSet {
        PointSet {
            mask: !self.mask & full_mask(self.ground_size()),
            ..*self
        }
    }

    /// Every subset of a ground set of `ground_size` points, in canonical order.
    pub fn all(ground_size: usize) -> impl DoubleEndedIterator<Item = PointSet> {
        (0..=full_mask(ground_size)).map(move |m| PointSet::from_mask_unchecked(m, ground_size))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ground_size, self.mask).cmp(&(other.ground_size, other.mask))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A duplicate-free family of subsets of one ground set, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground_size: u8,
    members: Vec<PointSet>,
}

impl SetFamily {
    pub fn new<I>(ground_size: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = PointSet>,
    {
        check_ground(ground_size)?;
        let mut out = Vec::new();
        for m in members {
            if m.ground_size() != ground_size {
                if let Some(p) = m.points().find(|&p| p >= ground_size) {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        size: ground_size,
                    });
                }
                return Err(Error::GroundMismatch {
                    expected: ground_size,
                    found: m.ground_size(),
                });
            }
            out.push(m);
        }
        Ok(Self::from_sets_unchecked(ground_size, out))
    }

    pub(crate) fn from_sets_unchecked(ground_size: usize, mut members: Vec<PointSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily {
            ground_size: ground_size as u8,
            members,
        }
    }

    pub(crate) fn from_masks_unchecked<I: IntoIterator<Item = u32>>(ground_size: usize, masks: I) -> Self {
        let members = masks
            .into_iter()
            .map(|m| PointSet::from_mask_unchecked(m, ground_size))
            .collect();
        Self::from_sets_unchecked(ground_size, members)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size as usize
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &PointSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PointSet> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[PointSet] {
        &self.members
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().map(PointSet::mask)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a PointSet;
    type IntoIter = std::slice::Iter<'a, PointSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

/// A finite point set together with a validated topology.
///
/// Spaces order first by size and then lexicographically by their canonical
/// list of open-set masks; enumeration output uses this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    size: u8,
    opens: SetFamily,
}

impl FiniteSpace {
    pub fn new<I>(size: usize, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = PointSet>,
    {
        let family = SetFamily::new(size, opens)?;
        validate_topology(size, &family)
    }

    /// Builds a space from characteristic masks.
    pub fn from_masks(size: usize, masks: &[u32]) -> Result<Self> {
        let sets = masks
            .iter()
            .map(|&m| PointSet::from_mask(m, size))
            .collect::<Result<Vec<_>>>()?;
        Self::new(size, sets)
    }

    /// Builds a space from lists of point indices.
    pub fn from_lists(size: usize, opens: &[&[usize]]) -> Result<Self> {
        let sets = opens
            .iter()
            .map(|o| PointSet::from_points(o.iter().copied(), size))
            .collect::<Result<Vec<_>>>()?;
        Self::new(size, sets)
    }

    pub fn discrete(size: usize) -> Result<Self> {
        check_ground(size)?;
        Ok(FiniteSpace {
            size: size as u8,
            opens: SetFamily::from_masks_unchecked(size, 0..=full_mask(size)),
        })
    }

    pub fn indiscrete(size: usize) -> Result<Self> {
        check_ground(size)?;
        Ok(FiniteSpace {
            size: size as u8,
            opens: SetFamily::from_masks_unchecked(size, [0, full_mask(size)]),
        })
    }

    pub(crate) fn from_family_unchecked(size: usize, opens: SetFamily) -> Self {
        FiniteSpace {
            size: size as u8,
            opens,
        }
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.size())
    }

    pub fn empty(&self) -> PointSet {
        PointSet::empty(self.size())
    }

    pub fn full_mask(&self) -> u32 {
        full_mask(self.size())
    }

    /// All subsets of the ground set in canonical order.
    pub fn subsets(&self) -> impl DoubleEndedIterator<Item = PointSet> {
        PointSet::all(self.size())
    }

    pub fn subset(&self, points: &[usize]) -> Result<PointSet> {
        PointSet::from_points(points.iter().copied(), self.size())
    }

    pub fn check(&self, a: &PointSet) -> Result<()> {
        if a.ground_size() != self.size() {
            return Err(Error::GroundMismatch {
                expected: self.size(),
                found: a.ground_size(),
            });
        }
        Ok(())
    }

    pub fn is_open(&self, a: &PointSet) -> Result<bool> {
        self.check(a)?;
        Ok(self.opens.contains(a))
    }

    pub fn is_closed(&self, a: &PointSet) -> Result<bool> {
        self.check(a)?;
        Ok(self.opens.contains(&a.complement()))
    }

    pub(crate) fn interior_mask(&self, a: u32) -> u32 {
        self.opens
            .masks()
            .filter(|&o| o & !a == 0)
            .fold(0, |acc, o| acc | o)
    }

    pub(crate) fn closure_mask(&self, a: u32) -> u32 {
        let full = self.full_mask();
        self.opens
            .masks()
            .map(|o| !o & full)
            .filter(|&c| a & !c == 0)
            .fold(full, |acc, c| acc & c)
    }

    pub(crate) fn is_open_mask(&self, a: u32) -> bool {
        self.opens.contains(&PointSet::from_mask_unchecked(a, self.size()))
    }

    pub(crate) fn set(&self, mask: u32) -> PointSet {
        PointSet::from_mask_unchecked(mask, self.size())
    }
}

impl PartialOrd for FiniteSpace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteSpace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.opens.masks().cmp(other.opens.masks()))
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace({} points, opens {:?})", self.size, self.opens)
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={{0..{}}}, τ={{", self.size - 1)?;
        for (i, o) in self.opens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{o}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn full_mask(ground_size: usize) -> u32 {
    if ground_size >= 32 {
        u32::MAX
    } else {
        (1u32 << ground_size) - 1
    }
}

fn check_ground(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::EmptyGround);
    }
    if size > MAX_POINTS {
        return Err(Error::TooManyPoints {
            size,
            max: MAX_POINTS,
        });
    }
    Ok(())
}

/// Checks the topology axioms and returns the validated space.
///
/// On a finite family, closure under pairwise unions and intersections is
/// equivalent to closure under arbitrary ones. The first violating pair in
/// canonical order is reported.
pub fn validate_topology(size: usize, candidate_opens: &SetFamily) -> Result<FiniteSpace> {
    check_ground(size)?;
    if candidate_opens.ground_size() != size {
        if let Some(p) = candidate_opens
            .iter()
            .flat_map(|s| s.points())
            .find(|&p| p >= size)
        {
            return Err(Error::PointOutOfRange { point: p, size });
        }
        return Err(Error::GroundMismatch {
            expected: size,
            found: candidate_opens.ground_size(),
        });
    }
    let family = candidate_opens;
    if !family.contains(&PointSet::empty(size)) || !family.contains(&PointSet::full(size)) {
        return Err(Error::MissingEmptyOrFull);
    }
    let sets = family.as_slice();
    for (i, left) in sets.iter().enumerate() {
        for right in &sets[i + 1..] {
            if !family.contains(&left.union(right)) {
                return Err(Error::NotClosedUnderUnion {
                    left: *left,
                    right: *right,
                });
            }
        }
    }
    for (i, left) in sets.iter().enumerate() {
        for right in &sets[i + 1..] {
            if !family.contains(&left.intersection(right)) {
                return Err(Error::NotClosedUnderIntersection {
                    left: *left,
                    right: *right,
                });
            }
        }
    }
    Ok(FiniteSpace::from_family_unchecked(size, family.clone()))
}

/// Union of all open subsets of `a`.
pub fn interior(space: &FiniteSpace, a: &PointSet) -> Result<PointSet> {
    space.check(a)?;
    Ok(space.set(space.interior_mask(a.mask())))
}

/// Intersection of all closed supersets of `a`.
pub fn closure(space: &FiniteSpace, a: &PointSet) -> Result<PointSet> {
    space.check(a)?;
    Ok(space.set(space.closure_mask(a.mask())))
}

/// Complements of the open sets, in canonical order.
pub fn closed_sets(space: &FiniteSpace) -> SetFamily {
    let full = space.full_mask();
    SetFamily::from_masks_unchecked(space.size(), space.opens().masks().map(|o| !o & full))
}

pub fn complement(space: &FiniteSpace, a: &PointSet) -> Result<PointSet> {
    space.check(a)?;
    Ok(a.complement())
}

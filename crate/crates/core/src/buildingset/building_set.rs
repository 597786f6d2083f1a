use serde::Serialize;

use super::bits::{compress, expand, positions};
use super::graph::Graph;
use super::key::{CanonicalKey, KeyMode};
use super::{BuildingSetError, Violation};

/// Largest ground set accepted when enumerating a graphical building set.
pub const MAX_GRAPHICAL_NODES: usize = 20;

/// A building set on an ordered ground of element labels.
///
/// Members are bitmasks over ground *positions*: bit `p` stands for
/// `ground[p]`. Members are kept sorted and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BuildingSet {
    ground: Vec<usize>,
    sets: Vec<u32>,
}

impl BuildingSet {
    /// Builds and validates a building set from label lists.
    pub fn new(ground: Vec<usize>, sets: &[Vec<usize>]) -> Result<Self, BuildingSetError> {
        let mut ground = ground;
        ground.sort_unstable();
        ground.dedup();
        if ground.len() > 32 {
            return Err(BuildingSetError::GroundTooLarge(ground.len()));
        }
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = 0u32;
            for label in set {
                let pos = ground.binary_search(label).map_err(|_| BuildingSetError::UnknownLabel(*label))?;
                mask |= 1 << pos;
            }
            masks.push(mask);
        }
        let b = Self::from_masks(ground, masks);
        b.validate().map_err(BuildingSetError::Invalid)?;
        Ok(b)
    }

    /// Assembles a building set without checking the axioms. An empty member
    /// is kept so that [`BuildingSet::validate`] can report it.
    pub(crate) fn from_masks(ground: Vec<usize>, mut sets: Vec<u32>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        Self { ground, sets }
    }

    /// All node subsets inducing a connected subgraph.
    pub fn from_graph(g: &Graph) -> Result<Self, BuildingSetError> {
        let n = g.n();
        if n > MAX_GRAPHICAL_NODES {
            return Err(BuildingSetError::GroundTooLarge(n));
        }
        let sets = (1..=g.full_mask()).filter(|&m| g.is_connected_subset(m)).collect();
        Ok(Self { ground: (0..n).collect(), sets })
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    /// Dimension of the nestohedron: ground size minus one.
    pub fn dimension(&self) -> usize {
        self.ground.len().saturating_sub(1)
    }

    /// Member masks over ground positions, ascending.
    pub fn sets(&self) -> &[u32] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn full_mask(&self) -> u32 {
        if self.ground.len() >= 32 {
            u32::MAX
        } else {
            (1u32 << self.ground.len()) - 1
        }
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.sets.binary_search(&mask).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        !self.ground.is_empty() && self.contains(self.full_mask())
    }

    /// Mask for a list of ground labels.
    pub fn mask_of(&self, labels: &[usize]) -> Result<u32, BuildingSetError> {
        let mut pos = Vec::with_capacity(labels.len());
        for l in labels {
            pos.push(self.ground.binary_search(l).map_err(|_| BuildingSetError::UnknownLabel(*l))?);
        }
        Ok(expand(&pos))
    }

    pub fn labels_of(&self, mask: u32) -> Vec<usize> {
        positions(mask).map(|p| self.ground[p]).collect()
    }

    /// Checks both axioms exhaustively, returning the first violation found.
    pub fn validate(&self) -> Result<(), Violation> {
        if self.sets.first() == Some(&0) {
            return Err(Violation::EmptyMember);
        }
        if let Some(&bad) = self.sets.iter().find(|&&m| m & !self.full_mask() != 0) {
            return Err(Violation::OutsideGround(self.labels_of(bad & self.full_mask())));
        }
        for (p, &label) in self.ground.iter().enumerate() {
            if !self.contains(1 << p) {
                return Err(Violation::MissingSingleton(label));
            }
        }
        for (k, &a) in self.sets.iter().enumerate() {
            for &b in &self.sets[k + 1..] {
                if a & b != 0 && !self.contains(a | b) {
                    return Err(Violation::MissingUnion { first: self.labels_of(a), second: self.labels_of(b) });
                }
            }
        }
        Ok(())
    }

    /// `B|S`: members contained in `s`, on ground `s`.
    pub fn restriction(&self, s: u32) -> Result<Self, BuildingSetError> {
        if !self.contains(s) {
            return Err(BuildingSetError::NotAMember(self.labels_of(s)));
        }
        Ok(self.restrict_unchecked(s))
    }

    fn restrict_unchecked(&self, s: u32) -> Self {
        let ground = self.labels_of(s);
        let sets = self.sets.iter().filter(|&&t| t & !s == 0).map(|&t| compress(t, s)).collect();
        Self::from_masks(ground, sets)
    }

    /// `B − S`: every member with the elements of `s` deleted, empty images dropped.
    pub fn removal(&self, s: u32) -> Result<Self, BuildingSetError> {
        if !self.contains(s) {
            return Err(BuildingSetError::NotAMember(self.labels_of(s)));
        }
        if s == self.full_mask() {
            return Err(BuildingSetError::RemovesEverything);
        }
        let rest = self.full_mask() & !s;
        let ground = self.labels_of(rest);
        let sets = self.sets.iter().map(|&t| t & rest).filter(|&t| t != 0).map(|t| compress(t, rest)).collect();
        Ok(Self::from_masks(ground, sets))
    }

    /// Inclusion-maximal members.
    pub fn maximal_sets(&self) -> Vec<u32> {
        self.sets.iter().copied().filter(|&a| !self.sets.iter().any(|&b| b != a && a & !b == 0)).collect()
    }

    /// Connected components, ordered by their smallest ground label.
    pub fn components(&self) -> Vec<Self> {
        if self.is_connected() {
            return vec![self.clone()];
        }
        let mut maximal = self.maximal_sets();
        maximal.sort_by_key(|m| m.trailing_zeros());
        maximal.into_iter().map(|m| self.restrict_unchecked(m)).collect()
    }

    pub fn canonical_key(&self, mode: KeyMode) -> CanonicalKey {
        CanonicalKey::of(self, mode)
    }

    /// Members as sorted lists of 1-based labels, lists in lexicographic order.
    pub fn to_label_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> =
            self.sets.iter().map(|&m| self.labels_of(m).into_iter().map(|l| l + 1).collect()).collect();
        lists.sort();
        lists
    }
}

impl Serialize for BuildingSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_label_lists().serialize(serializer)
    }
}

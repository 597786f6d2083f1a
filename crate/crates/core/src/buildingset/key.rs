use super::bits::positions;
use super::building_set::BuildingSet;
use super::perm::for_each_permutation;

/// Ground sizes up to which [`KeyMode::Isomorphism`] minimises over relabellings.
pub const MAX_ISO_GROUND: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum KeyMode {
    /// Relabel the ground `0..k` keeping label order.
    #[default]
    LabelOrder,
    /// Take the least key over all relabellings; grounds above
    /// [`MAX_ISO_GROUND`] fall back to label order.
    Isomorphism,
}

/// Identity of a normalized building set: its ground size and sorted member masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    size: u8,
    masks: Vec<u32>,
}

impl CanonicalKey {
    pub fn of(b: &BuildingSet, mode: KeyMode) -> Self {
        let size = b.ground_size() as u8;
        let label_order = b.sets().to_vec();
        let masks = match mode {
            KeyMode::Isomorphism if b.ground_size() <= MAX_ISO_GROUND && b.ground_size() > 1 => {
                let mut best = label_order;
                let mut scratch = Vec::with_capacity(best.len());
                for_each_permutation(b.ground_size(), |perm| {
                    scratch.clear();
                    scratch.extend(b.sets().iter().map(|&m| permute(m, perm)));
                    scratch.sort_unstable();
                    if scratch < best {
                        best.clone_from(&scratch);
                    }
                });
                best
            }
            _ => label_order,
        };
        Self { size, masks }
    }

    /// Ground size of the normalized building set.
    pub fn ground_size(&self) -> usize {
        self.size as usize
    }

    /// Nestohedron dimension.
    pub fn dimension(&self) -> usize {
        self.ground_size().saturating_sub(1)
    }

    pub fn member_count(&self) -> usize {
        self.masks.len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 4 * self.masks.len());
        out.push(self.size);
        for m in &self.masks {
            out.extend_from_slice(&m.to_le_bytes());
        }
        out
    }

    /// The normalized building set, on ground `0..size`.
    pub fn to_building_set(&self) -> BuildingSet {
        BuildingSet::from_masks((0..self.ground_size()).collect(), self.masks.clone())
    }
}

fn permute(mask: u32, perm: &[usize]) -> u32 {
    positions(mask).fold(0, |acc, p| acc | 1 << perm[p])
}

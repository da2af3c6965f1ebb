//! Caterpillar spine decompositions.
//!
//! A caterpillar is split into its spine `v_0 … v_d` (the deterministic
//! diameter geodesic) and, for each interior position `i`, the sorted list
//! of leaves hanging at `v_i`. The prefix/suffix vertex sets `L_i` and
//! `R_j` used by the extremal arguments are recovered from this data alone.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineDecomposition {
    spine: Vec<usize>,
    attachments: BTreeMap<usize, Vec<usize>>,
    left_count: usize,
    right_count: usize,
}

impl SpineDecomposition {
    /// Decomposes a caterpillar; anything else is rejected.
    pub fn decompose(t: &Tree) -> Result<Self, Error> {
        if !t.is_caterpillar() {
            return Err(Error::NotACaterpillar);
        }
        let (d, spine) = t.diameter_and_geodesic()?;
        let mut on_spine = alloc::vec![false; t.n()];
        for &v in &spine {
            on_spine[v] = true;
        }
        let mut attachments: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for y in 0..t.n() {
            if on_spine[y] {
                continue;
            }
            // Off-spine vertices of a caterpillar are leaves at an interior
            // spine vertex; the geodesic being a diameter path forces this.
            debug_assert!(t.is_leaf(y));
            let anchor = t.neighbors(y)[0];
            let i = spine.iter().position(|&v| v == anchor).expect("anchor on spine");
            debug_assert!(0 < i && i < d);
            attachments.entry(i).or_default().push(y);
        }
        let at = |i: usize| attachments.get(&i).map_or(0, Vec::len);
        let (left_count, right_count) = if d >= 2 { (at(1) + 1, at(d - 1) + 1) } else { (0, 0) };
        Ok(SpineDecomposition { spine, attachments, left_count, right_count })
    }

    /// Spine vertices `v_0 … v_d`.
    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    /// Diameter `d` (the spine has `d + 1` vertices).
    pub fn diameter(&self) -> usize {
        self.spine.len() - 1
    }

    /// Leaves attached at position `i`, sorted; empty for bare positions.
    pub fn attachments_at(&self, i: usize) -> &[usize] {
        self.attachments.get(&i).map_or(&[], Vec::as_slice)
    }

    /// All attachment lists, keyed by interior spine position.
    pub fn attachments(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.attachments
    }

    /// Number of leaves in the left cluster: `|L_1| - 1`, i.e. `v_0` plus
    /// everything hanging at `v_1`. Zero when `d = 1`.
    pub fn left_count(&self) -> usize {
        self.left_count
    }

    /// Number of leaves in the right cluster: `|R_{d-1}| - 1`.
    pub fn right_count(&self) -> usize {
        self.right_count
    }

    /// `L_i`: the component of `v_i` after cutting the spine edge
    /// `(v_i, v_{i+1})`, for `0 <= i < d`. Sorted.
    pub fn left_set(&self, i: usize) -> Vec<usize> {
        let d = self.diameter();
        assert!(i < d, "left_set index {i} out of range for diameter {d}");
        let mut set: Vec<usize> = self.spine[..=i].to_vec();
        for (&j, leaves) in &self.attachments {
            if j <= i {
                set.extend_from_slice(leaves);
            }
        }
        set.sort_unstable();
        set
    }

    /// `R_j`: the component of `v_j` after cutting the spine edge
    /// `(v_{j-1}, v_j)`, for `1 <= j <= d`. Sorted.
    pub fn right_set(&self, j: usize) -> Vec<usize> {
        let d = self.diameter();
        assert!(0 < j && j <= d, "right_set index {j} out of range for diameter {d}");
        let mut set: Vec<usize> = self.spine[j..].to_vec();
        for (&i, leaves) in &self.attachments {
            if i >= j {
                set.extend_from_slice(leaves);
            }
        }
        set.sort_unstable();
        set
    }
}

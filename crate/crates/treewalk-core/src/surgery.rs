//! Tree surgeries: straightening a stray leaf onto a path, shifting
//! caterpillar leaves along the spine, and re-homing a single leaf.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::spine::SpineDecomposition;
use crate::tree::Tree;

/// Re-attach leaf `y` to the path vertex nearest to it.
///
/// `path` must list the vertices of a maximal path of `t` in order (both
/// endpoints leaves), and `y` must be a leaf neither on the path nor
/// adjacent to it. Everything else is left alone, so the order is
/// preserved and repeated application ends in a caterpillar.
pub fn sigma(t: &Tree, path: &[usize], y: usize) -> Result<Tree, Error> {
    for &v in path {
        t.check_vertex(v)?;
    }
    t.check_vertex(y)?;
    if path.len() < 2 {
        return Err(Error::NotAPath);
    }
    let mut on_path = vec![false; t.n()];
    for &v in path {
        if on_path[v] {
            return Err(Error::NotAPath);
        }
        on_path[v] = true;
    }
    for pair in path.windows(2) {
        if !t.has_edge(pair[0], pair[1]) {
            return Err(Error::NotAPath);
        }
    }
    if !t.is_leaf(path[0]) || !t.is_leaf(path[path.len() - 1]) {
        return Err(Error::PathNotMaximal);
    }
    if !t.is_leaf(y) {
        return Err(Error::NotALeaf { v: y });
    }
    if on_path[y] {
        return Err(Error::LeafOnPath { v: y });
    }
    let anchor = t.neighbors(y)[0];
    if on_path[anchor] {
        return Err(Error::LeafAdjacentToPath { v: y });
    }
    let from_y = t.distances_from(y);
    let closest = *path.iter().min_by_key(|&&v| from_y[v]).expect("path is nonempty");
    let ties = path.iter().filter(|&&v| from_y[v] == from_y[closest]).count();
    assert_eq!(ties, 1, "closest path vertex is unique in a tree");
    let mut edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| (a, b) != (anchor.min(y), anchor.max(y)))
        .collect();
    edges.push((closest, y));
    Tree::build(t.n(), &edges)
}

fn check_spine(t: &Tree, spine: &SpineDecomposition) -> Result<(), Error> {
    let s = spine.spine();
    let mut covered = 0usize;
    for &v in s {
        if v >= t.n() {
            return Err(Error::SpineMismatch);
        }
        covered += 1;
    }
    for pair in s.windows(2) {
        if !t.has_edge(pair[0], pair[1]) {
            return Err(Error::SpineMismatch);
        }
    }
    for (&i, leaves) in spine.attachments() {
        if i == 0 || i >= spine.diameter() {
            return Err(Error::SpineMismatch);
        }
        for &leaf in leaves {
            if leaf >= t.n() || !t.is_leaf(leaf) || !t.has_edge(s[i], leaf) {
                return Err(Error::SpineMismatch);
            }
            covered += 1;
        }
    }
    let (diameter, _) = t.diameter_and_geodesic()?;
    if covered != t.n() || spine.diameter() != diameter {
        return Err(Error::SpineMismatch);
    }
    Ok(())
}

/// Shift caterpillar leaves along the spine.
///
/// Each move `(i, j)` detaches the smallest-labeled leaf hanging at spine
/// position `i` and re-attaches it at position `j`; positions are indices
/// into `spine`, not vertex labels, and targets must stay on the spine
/// interior so the diameter cannot change. Moves apply in order, the
/// second seeing the first's result.
pub fn tau(
    t: &Tree,
    spine: &SpineDecomposition,
    move1: (usize, usize),
    move2: Option<(usize, usize)>,
) -> Result<Tree, Error> {
    check_spine(t, spine)?;
    let d = spine.diameter();
    let mut attachments: BTreeMap<usize, Vec<usize>> = spine.attachments().clone();
    let mut moves = vec![move1];
    moves.extend(move2);
    for (i, j) in moves {
        if j == 0 || j >= d {
            return Err(Error::OffInterior { i: j });
        }
        let leaf = match attachments.get_mut(&i) {
            Some(list) if !list.is_empty() => list.remove(0),
            _ => return Err(Error::NoLeafAt { i }),
        };
        let list = attachments.entry(j).or_default();
        let at = list.partition_point(|&w| w < leaf);
        list.insert(at, leaf);
    }
    let s = spine.spine();
    let mut edges: Vec<(usize, usize)> = s.windows(2).map(|p| (p[0], p[1])).collect();
    for (&i, leaves) in &attachments {
        for &leaf in leaves {
            edges.push((s[i], leaf));
        }
    }
    Tree::build(t.n(), &edges)
}

/// Detach leaf `z` from its neighbor and re-attach it to `x`.
pub fn move_leaf(t: &Tree, z: usize, x: usize) -> Result<Tree, Error> {
    t.check_vertex(z)?;
    t.check_vertex(x)?;
    if x == z {
        return Err(Error::SameVertex { v: z });
    }
    if !t.is_leaf(z) {
        return Err(Error::NotALeaf { v: z });
    }
    let anchor = t.neighbors(z)[0];
    if anchor == x {
        return Err(Error::AlreadyAdjacent { leaf: z, to: x });
    }
    let mut edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| (a, b) != (anchor.min(z), anchor.max(z)))
        .collect();
    edges.push((x, z));
    Tree::build(t.n(), &edges)
}

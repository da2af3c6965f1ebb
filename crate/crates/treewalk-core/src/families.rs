//! Named tree families (stars, paths, brooms, double and near double
//! brooms) and exact evaluators for their closed-form joining and meeting
//! times.
//!
//! Generated trees follow one labeling convention: spine vertices come
//! first as `0..=d`, then the extra left bristles, then the extra right
//! bristles, then the singleton leaf if the family has one. Landmarks are
//! returned by name (`v0`…`vd`, `u1`…, `w1`…, `z`) with `u1 = v0` and
//! `w1 = vd`, so formula targets can be addressed without re-deriving the
//! labeling.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::rational::Rational;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum FamilyKind {
    Star,
    Path,
    Broom,
    DoubleBroom,
    NearDoubleBroom,
    BalancedDoubleBroom,
    BalancedNearDoubleBroom,
    DoubleStar,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Star => "star",
            FamilyKind::Path => "path",
            FamilyKind::Broom => "broom",
            FamilyKind::DoubleBroom => "double_broom",
            FamilyKind::NearDoubleBroom => "near_double_broom",
            FamilyKind::BalancedDoubleBroom => "balanced_double_broom",
            FamilyKind::BalancedNearDoubleBroom => "balanced_near_double_broom",
            FamilyKind::DoubleStar => "double_star",
        }
    }
}

impl core::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "star" => FamilyKind::Star,
            "path" => FamilyKind::Path,
            "broom" => FamilyKind::Broom,
            "double_broom" => FamilyKind::DoubleBroom,
            "near_double_broom" => FamilyKind::NearDoubleBroom,
            "balanced_double_broom" => FamilyKind::BalancedDoubleBroom,
            "balanced_near_double_broom" => FamilyKind::BalancedNearDoubleBroom,
            "double_star" => FamilyKind::DoubleStar,
            _ => return Err(Error::Family(format!("unknown family kind '{s}'"))),
        })
    }
}

/// Parameters selecting one member of a family.
///
/// `d` is the diameter, `l` and `r` the left and right bristle counts
/// (endpoints included), `k` the spine index carrying the singleton leaf
/// of a near double broom. Fields a kind does not use stay `None`;
/// balanced kinds derive `l`, `r` and `k` from `n` and `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub d: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub l: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub r: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub k: Option<usize>,
}

impl FamilySpec {
    fn new(kind: FamilyKind, n: usize) -> Self {
        FamilySpec { kind, n, d: None, l: None, r: None, k: None }
    }

    pub fn star(n: usize) -> Self {
        Self::new(FamilyKind::Star, n)
    }

    pub fn path(n: usize) -> Self {
        Self::new(FamilyKind::Path, n)
    }

    pub fn broom(n: usize, d: usize) -> Self {
        FamilySpec { d: Some(d), ..Self::new(FamilyKind::Broom, n) }
    }

    pub fn double_broom(n: usize, d: usize, l: usize, r: usize) -> Self {
        FamilySpec { d: Some(d), l: Some(l), r: Some(r), ..Self::new(FamilyKind::DoubleBroom, n) }
    }

    pub fn near_double_broom(n: usize, d: usize, l: usize, r: usize, k: usize) -> Self {
        FamilySpec {
            d: Some(d),
            l: Some(l),
            r: Some(r),
            k: Some(k),
            ..Self::new(FamilyKind::NearDoubleBroom, n)
        }
    }

    pub fn balanced_double_broom(n: usize, d: usize) -> Self {
        FamilySpec { d: Some(d), ..Self::new(FamilyKind::BalancedDoubleBroom, n) }
    }

    pub fn balanced_near_double_broom(n: usize, d: usize) -> Self {
        FamilySpec { d: Some(d), ..Self::new(FamilyKind::BalancedNearDoubleBroom, n) }
    }

    pub fn double_star(n: usize, l: usize, r: usize) -> Self {
        FamilySpec { l: Some(l), r: Some(r), ..Self::new(FamilyKind::DoubleStar, n) }
    }
}

enum Shape {
    Star { n: usize },
    BroomLike { n: usize, d: usize, l: usize, r: usize, z_at: Option<usize> },
}

fn require_absent(kind: FamilyKind, field: &str, value: Option<usize>) -> Result<(), Error> {
    match value {
        None => Ok(()),
        Some(_) => Err(Error::Family(format!("{kind} does not take {field}"))),
    }
}

fn require(kind: FamilyKind, field: &str, value: Option<usize>) -> Result<usize, Error> {
    value.ok_or_else(|| Error::Family(format!("{kind} requires {field}")))
}

fn check_diameter(n: usize, d: usize, min_d: usize, max_d: usize) -> Result<(), Error> {
    if d < min_d || d > max_d {
        return Err(Error::DiameterOutOfRange { d, n });
    }
    Ok(())
}

fn check_double_broom(n: usize, d: usize, l: usize, r: usize) -> Result<(), Error> {
    check_diameter(n, d, 3, n.saturating_sub(1))?;
    if l < 1 || r < 1 {
        return Err(Error::Family(format!("double broom needs l >= 1 and r >= 1 (got l={l}, r={r})")));
    }
    if l + r + d - 1 != n {
        return Err(Error::Family(format!(
            "double broom needs n = l + r + d - 1 (got n={n}, l={l}, r={r}, d={d})"
        )));
    }
    Ok(())
}

fn check_near_double_broom(n: usize, d: usize, l: usize, r: usize, k: usize) -> Result<(), Error> {
    check_diameter(n, d, 4, n.saturating_sub(2))?;
    if k < 2 || k > d - 2 {
        return Err(Error::Family(format!("singleton index k={k} must satisfy 2 <= k <= d-2 (d={d})")));
    }
    if l < 1 || r < 1 {
        return Err(Error::Family(format!(
            "near double broom needs l >= 1 and r >= 1 (got l={l}, r={r})"
        )));
    }
    if l + r + d != n {
        return Err(Error::Family(format!(
            "near double broom needs n = l + r + d (got n={n}, l={l}, r={r}, d={d})"
        )));
    }
    Ok(())
}

fn resolve(spec: &FamilySpec) -> Result<Shape, Error> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: n });
    }
    let kind = spec.kind;
    match kind {
        FamilyKind::Star | FamilyKind::Path => {
            require_absent(kind, "d", spec.d)?;
            require_absent(kind, "l", spec.l)?;
            require_absent(kind, "r", spec.r)?;
            require_absent(kind, "k", spec.k)?;
            Ok(match kind {
                FamilyKind::Star => Shape::Star { n },
                _ => Shape::BroomLike { n, d: n - 1, l: 1, r: 1, z_at: None },
            })
        }
        FamilyKind::Broom => {
            let d = require(kind, "d", spec.d)?;
            require_absent(kind, "l", spec.l)?;
            require_absent(kind, "r", spec.r)?;
            require_absent(kind, "k", spec.k)?;
            check_diameter(n, d, 2, n - 1)?;
            Ok(Shape::BroomLike { n, d, l: n - d, r: 1, z_at: None })
        }
        FamilyKind::DoubleBroom => {
            let d = require(kind, "d", spec.d)?;
            let l = require(kind, "l", spec.l)?;
            let r = require(kind, "r", spec.r)?;
            require_absent(kind, "k", spec.k)?;
            check_double_broom(n, d, l, r)?;
            Ok(Shape::BroomLike { n, d, l, r, z_at: None })
        }
        FamilyKind::DoubleStar => {
            if spec.d.is_some() && spec.d != Some(3) {
                return Err(Error::Family(format!("double star has d = 3, not {}", spec.d.unwrap())));
            }
            let l = require(kind, "l", spec.l)?;
            let r = require(kind, "r", spec.r)?;
            require_absent(kind, "k", spec.k)?;
            check_double_broom(n, 3, l, r)?;
            Ok(Shape::BroomLike { n, d: 3, l, r, z_at: None })
        }
        FamilyKind::NearDoubleBroom => {
            let d = require(kind, "d", spec.d)?;
            let l = require(kind, "l", spec.l)?;
            let r = require(kind, "r", spec.r)?;
            let k = require(kind, "k", spec.k)?;
            check_near_double_broom(n, d, l, r, k)?;
            Ok(Shape::BroomLike { n, d, l, r, z_at: Some(k) })
        }
        FamilyKind::BalancedDoubleBroom => {
            let d = require(kind, "d", spec.d)?;
            require_absent(kind, "l", spec.l)?;
            require_absent(kind, "r", spec.r)?;
            require_absent(kind, "k", spec.k)?;
            check_diameter(n, d, 3, n - 1)?;
            let l = (n - d + 1) / 2;
            let r = n - d + 1 - l;
            Ok(Shape::BroomLike { n, d, l, r, z_at: None })
        }
        FamilyKind::BalancedNearDoubleBroom => {
            let d = require(kind, "d", spec.d)?;
            require_absent(kind, "l", spec.l)?;
            require_absent(kind, "r", spec.r)?;
            require_absent(kind, "k", spec.k)?;
            check_diameter(n, d, 4, n.saturating_sub(2))?;
            let l = (n - d) / 2;
            let r = n - d - l;
            Ok(Shape::BroomLike { n, d, l, r, z_at: Some(d / 2) })
        }
    }
}

fn star_tree(n: usize) -> (Tree, BTreeMap<String, usize>) {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    let t = Tree::build(n, &edges).expect("star is a tree");
    let mut landmarks = BTreeMap::new();
    landmarks.insert(String::from("center"), 0);
    (t, landmarks)
}

fn broom_like(n: usize, d: usize, l: usize, r: usize, z_at: Option<usize>) -> (Tree, BTreeMap<String, usize>) {
    let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
    let mut landmarks = BTreeMap::new();
    for i in 0..=d {
        landmarks.insert(format!("v{i}"), i);
    }
    landmarks.insert(String::from("u1"), 0);
    landmarks.insert(String::from("w1"), d);
    let mut next = d + 1;
    for j in 2..=l {
        edges.push((1, next));
        landmarks.insert(format!("u{j}"), next);
        next += 1;
    }
    for j in 2..=r {
        edges.push((d - 1, next));
        landmarks.insert(format!("w{j}"), next);
        next += 1;
    }
    if let Some(k) = z_at {
        edges.push((k, next));
        landmarks.insert(String::from("z"), next);
        next += 1;
    }
    debug_assert_eq!(next, n);
    let t = Tree::build(n, &edges).expect("family construction is a tree");
    (t, landmarks)
}

/// Build the tree a spec describes, with its named landmark vertices.
pub fn generate(spec: &FamilySpec) -> Result<(Tree, BTreeMap<String, usize>), Error> {
    Ok(match resolve(spec)? {
        Shape::Star { n } => star_tree(n),
        Shape::BroomLike { n, d, l, r, z_at } => broom_like(n, d, l, r, z_at),
    })
}

fn fits_u64(value: i128) -> u64 {
    u64::try_from(value).expect("joining value fits in u64")
}

/// Maximum joining time of the broom of order `n` and diameter `d`:
/// `4(d-1)n² + (5-4d²)n + (4d³-4d-3)/3`.
pub fn jmax_broom_formula(n: usize, d: usize) -> Result<u64, Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: n });
    }
    check_diameter(n, d, 2, n - 1)?;
    let (n, d) = (n as i128, d as i128);
    let value = 4 * (d - 1) * n * n + (5 - 4 * d * d) * n + (4 * d * d * d - 4 * d - 3) / 3;
    Ok(fits_u64(value))
}

/// Meeting time of the broom: the joining maximum over the total degree.
pub fn tmeet_broom_formula(n: usize, d: usize) -> Result<Rational, Error> {
    let j = jmax_broom_formula(n, d)?;
    Ok(Rational::new(BigInt::from(j), BigInt::from(2 * (n as i64 - 1))))
}

fn sq(x: i128) -> i128 {
    x * x
}

fn endpoint_base(n: i128, d: i128) -> i128 {
    4 * n * n - 11 * n - d + 9
}

fn double_broom_endpoint(n: i128, d: i128, far_bristles: i128) -> i128 {
    let c = far_bristles;
    endpoint_base(n, d) + (1..=d - 2).map(|i| sq(2 * c + 2 * i - 1)).sum::<i128>()
}

// `split` is the term index at which the singleton leaf starts counting
// against this endpoint: d-k when looking from v0, k when looking from vd.
fn near_double_broom_endpoint(n: i128, d: i128, far_bristles: i128, split: i128) -> i128 {
    let c = far_bristles;
    let low: i128 = (1..split).map(|i| sq(2 * c + 2 * i - 1)).sum();
    let high: i128 = (split..=d - 2).map(|i| sq(2 * c + 2 * i + 1)).sum();
    endpoint_base(n, d) + low + high
}

/// Joining times of the two spine endpoints of the double broom, as
/// `(J(v0), J(vd))`.
pub fn j_double_broom_endpoints(n: usize, d: usize, l: usize, r: usize) -> Result<(u64, u64), Error> {
    check_double_broom(n, d, l, r)?;
    let (n, d) = (n as i128, d as i128);
    let j0 = double_broom_endpoint(n, d, r as i128);
    let jd = double_broom_endpoint(n, d, l as i128);
    Ok((fits_u64(j0), fits_u64(jd)))
}

/// Joining times of the two spine endpoints of the near double broom, as
/// `(J(v0), J(vd))`.
pub fn j_near_double_broom_endpoints(
    n: usize,
    d: usize,
    l: usize,
    r: usize,
    k: usize,
) -> Result<(u64, u64), Error> {
    check_near_double_broom(n, d, l, r, k)?;
    let (n, d, k) = (n as i128, d as i128, k as i128);
    let j0 = near_double_broom_endpoint(n, d, r as i128, d - k);
    let jd = near_double_broom_endpoint(n, d, l as i128, k);
    Ok((fits_u64(j0), fits_u64(jd)))
}

/// Minimum meeting time over trees of order `n` and diameter `d`,
/// together with the family attaining it: the balanced double broom when
/// `n` and `d` have opposite parities (and always at `d = 3`), the
/// balanced near double broom when they share a parity.
pub fn tmeet_min_closed(n: usize, d: usize) -> Result<(Rational, FamilySpec), Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: n });
    }
    if d < 3 || d >= n {
        return Err(Error::DiameterOutOfRange { d, n });
    }
    let (ni, di) = (n as i128, d as i128);
    let (j, family) = if d == 3 {
        let j = if n % 2 == 0 { 5 * ni * ni - 13 * ni + 7 } else { 5 * ni * ni - 11 * ni + 6 };
        (j, FamilySpec::balanced_double_broom(n, 3))
    } else if (n + d) % 2 == 1 {
        let j = (di + 2) * ni * ni - (2 * di + 7) * ni + (di * di * di - 6 * di * di + 11 * di + 15) / 3;
        (j, FamilySpec::balanced_double_broom(n, d))
    } else if d % 2 == 0 {
        let j = (di + 2) * ni * ni - (2 * di + 7) * ni + (di * di * di - 3 * di * di + 2 * di + 21) / 3;
        (j, FamilySpec::balanced_near_double_broom(n, d))
    } else {
        let j = (di + 2) * ni * ni - (2 * di + 5) * ni + (di * di * di - 3 * di * di + 2 * di + 12) / 3;
        (j, FamilySpec::balanced_near_double_broom(n, d))
    };
    Ok((Rational::new(BigInt::from(j), BigInt::from(2 * (n as i64 - 1))), family))
}

/// Extreme meeting times over all trees of order `n`: the star's minimum
/// `2n - 7/2` and the path's maximum `(4n² - 8n + 3)/6`.
pub fn tmeet_fixed_order_bounds(n: usize) -> Result<(Rational, Rational), Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: n });
    }
    let ni = n as i128;
    let min = Rational::new(BigInt::from(4 * ni - 7), BigInt::from(2));
    let max = Rational::new(BigInt::from(4 * ni * ni - 8 * ni + 3), BigInt::from(6));
    Ok((min, max))
}

//! Isomorph-free tree enumeration and exhaustive verification of the
//! extremal statements at small orders.
//!
//! Two independent generation strategies back the enumeration: brute
//! decoding of every Prüfer sequence for `n <= 9`, and growth by leaf
//! attachment with canonical-code dedupe above that. Their agreement on
//! the overlap is itself a test target.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::families::{self, FamilySpec};
use crate::hitting;
use crate::rational::{exact_string, expect_u64, ratio};
use crate::tree::{canonical_code_from_adj, decode_pruefer, Tree};

/// Largest order enumerated unless a caller raises the cap.
pub const DEFAULT_ENUM_CAP: usize = 16;

/// Outcome of one exhaustive extremal scan.
///
/// Values are on the joining-time scale (meeting times multiplied by
/// `2(n-1)`), so they stay integers. In rooted reports `d` carries the
/// root eccentricity instead of a diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub objective: String,
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub d: Option<usize>,
    pub extremal_value: u64,
    pub formula_value: u64,
    pub optimal_codes: Vec<String>,
    pub expected_code: String,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub expected_family: Option<FamilySpec>,
    pub agrees: bool,
    pub unique: bool,
    pub trees_scanned: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Result of one identity check on one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LemmaCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

fn single_vertex_class() -> BTreeMap<String, Tree> {
    let t = Tree::build(1, &[]).expect("single vertex");
    let mut out = BTreeMap::new();
    out.insert(t.canonical_code(), t);
    out
}

fn normalized(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    out.sort_unstable();
    out
}

fn enumerate_by_pruefer(n: usize) -> BTreeMap<String, Tree> {
    if n == 1 {
        return single_vertex_class();
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut out = BTreeMap::new();
    loop {
        decode_pruefer(&seq, n, &mut edges);
        for list in &mut adj {
            list.clear();
        }
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let code = canonical_code_from_adj(&adj);
        out.entry(code).or_insert_with(|| Tree::from_edges_unchecked(n, normalized(&edges)));
        let mut digit = 0;
        loop {
            if digit == len {
                return out;
            }
            seq[digit] += 1;
            if seq[digit] < n {
                break;
            }
            seq[digit] = 0;
            digit += 1;
        }
    }
}

fn enumerate_by_extension(n: usize) -> BTreeMap<String, Tree> {
    let mut level = single_vertex_class();
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let mut edges = t.edges().to_vec();
                edges.push((v, m - 1));
                let child = Tree::from_edges_unchecked(m, normalized(&edges));
                next.entry(child.canonical_code()).or_insert(child);
            }
        }
        level = next;
    }
    level
}

/// One representative per isomorphism class of trees of order `n`, in
/// canonical-code order.
pub fn enumerate_trees(n: usize, cap: usize) -> Result<Vec<Tree>, Error> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, actual: n });
    }
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    let classes = if n <= 9 { enumerate_by_pruefer(n) } else { enumerate_by_extension(n) };
    Ok(classes.into_values().collect())
}

/// The classes of order `n` whose diameter is exactly `d`.
pub fn enumerate_trees_diameter(n: usize, d: usize, cap: usize) -> Result<Vec<Tree>, Error> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, actual: n });
    }
    if d < 2 || d > n - 1 {
        return Err(Error::DiameterOutOfRange { d, n });
    }
    let all = enumerate_trees(n, cap)?;
    Ok(all
        .into_iter()
        .filter(|t| t.diameter_and_geodesic().expect("n >= 3").0 == d)
        .collect())
}

struct Scan {
    value: u64,
    codes: Vec<String>,
    scanned: u64,
}

fn scan_extremal<I: IntoIterator<Item = Tree>>(trees: I, want_max: bool) -> Option<Scan> {
    let mut best: Option<Scan> = None;
    for t in trees {
        let (value, _) = hitting::jmax(&t).expect("valid tree");
        let code = t.canonical_code();
        match &mut best {
            None => best = Some(Scan { value, codes: vec![code], scanned: 1 }),
            Some(scan) => {
                scan.scanned += 1;
                if value == scan.value {
                    scan.codes.push(code);
                } else if (value > scan.value) == want_max {
                    scan.value = value;
                    scan.codes = vec![code];
                }
            }
        }
    }
    best
}

fn report(
    objective: &str,
    n: usize,
    d: Option<usize>,
    scan: Scan,
    formula_value: u64,
    expected_code: String,
    expected_family: Option<FamilySpec>,
) -> VerificationReport {
    let agrees = scan.value == formula_value && scan.codes.contains(&expected_code);
    let unique = scan.codes.len() == 1;
    VerificationReport {
        objective: objective.to_string(),
        n,
        d,
        extremal_value: scan.value,
        formula_value,
        optimal_codes: scan.codes,
        expected_code,
        expected_family,
        agrees,
        unique,
        trees_scanned: scan.scanned,
    }
}

fn check_verify_range(n: usize, d: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    if d < 3 || d >= n {
        return Err(Error::DiameterOutOfRange { d, n });
    }
    Ok(())
}

/// Scan every tree of order `n` and diameter `d` for the largest maximum
/// joining time and compare against the broom prediction.
pub fn verify_max(n: usize, d: usize, cap: usize) -> Result<VerificationReport, Error> {
    check_verify_range(n, d, cap)?;
    let trees = enumerate_trees_diameter(n, d, cap)?;
    let scan = scan_extremal(trees, true).expect("diameter class is nonempty");
    let family = FamilySpec::broom(n, d);
    let (broom, _) = families::generate(&family)?;
    Ok(report(
        "max",
        n,
        Some(d),
        scan,
        families::jmax_broom_formula(n, d)?,
        broom.canonical_code(),
        Some(family),
    ))
}

/// Scan every tree of order `n` and diameter `d` for the smallest maximum
/// joining time and compare against the balanced double broom or balanced
/// near double broom prediction.
pub fn verify_min(n: usize, d: usize, cap: usize) -> Result<VerificationReport, Error> {
    check_verify_range(n, d, cap)?;
    let trees = enumerate_trees_diameter(n, d, cap)?;
    let scan = scan_extremal(trees, false).expect("diameter class is nonempty");
    let (tmeet, family) = families::tmeet_min_closed(n, d)?;
    let formula_value = expect_u64(&(tmeet * ratio(2 * (n as i64 - 1), 1)));
    let (optimal, _) = families::generate(&family)?;
    Ok(report(
        "min",
        n,
        Some(d),
        scan,
        formula_value,
        optimal.canonical_code(),
        Some(family),
    ))
}

/// Scan all trees of order `n` for both meeting-time extremes: the star
/// must be the unique minimum and the path the unique maximum. Returns
/// the `(min, max)` reports.
pub fn verify_fixed_order(
    n: usize,
    cap: usize,
) -> Result<(VerificationReport, VerificationReport), Error> {
    if n < 4 {
        return Err(Error::OrderTooSmall { min: 4, actual: n });
    }
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    let trees = enumerate_trees(n, cap)?;
    let min_scan = scan_extremal(trees.iter().cloned(), false).expect("nonempty");
    let max_scan = scan_extremal(trees, true).expect("nonempty");
    let (min_value, max_value) = families::tmeet_fixed_order_bounds(n)?;
    let total = ratio(2 * (n as i64 - 1), 1);
    let star_spec = FamilySpec::star(n);
    let path_spec = FamilySpec::path(n);
    let (star, _) = families::generate(&star_spec)?;
    let (path, _) = families::generate(&path_spec)?;
    let min_report = report(
        "order_min",
        n,
        None,
        min_scan,
        expect_u64(&(min_value * &total)),
        star.canonical_code(),
        Some(star_spec),
    );
    let max_report = report(
        "order_max",
        n,
        None,
        max_scan,
        expect_u64(&(max_value * &total)),
        path.canonical_code(),
        Some(path_spec),
    );
    Ok((min_report, max_report))
}

/// Over every rooted class `(tree, z)` of order `n` with eccentricity of
/// `z` exactly `r`, confirm the unique maximizer of `J(z)` is the broom
/// of diameter `r` rooted at its handle tip.
pub fn verify_rooted_broom(n: usize, r: usize, cap: usize) -> Result<VerificationReport, Error> {
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    if r < 2 || r >= n {
        return Err(Error::Family(format!(
            "root eccentricity r={r} must satisfy 2 <= r <= n-1 (n={n})"
        )));
    }
    let mut best: Option<u64> = None;
    let mut best_codes: Vec<String> = Vec::new();
    let mut seen = alloc::collections::BTreeSet::new();
    for t in enumerate_trees(n, cap)? {
        let dist = t.distances();
        let profile = hitting::joining_profile(&t);
        for z in 0..t.n() {
            let ecc = *dist[z].iter().max().expect("nonempty");
            if ecc != r {
                continue;
            }
            let code = t.rooted_code(z)?;
            if !seen.insert(code.clone()) {
                continue;
            }
            let value = profile[z];
            if best.is_none() || value > best.unwrap() {
                best = Some(value);
                best_codes = vec![code];
            } else if value == best.unwrap() {
                best_codes.push(code);
            }
        }
    }
    let family = FamilySpec::broom(n, r);
    let (broom, landmarks) = families::generate(&family)?;
    let expected_code = broom.rooted_code(landmarks[&format!("v{r}")])?;
    best_codes.sort_unstable();
    let scan = Scan {
        value: best.expect("rooted class is nonempty"),
        codes: best_codes,
        scanned: seen.len() as u64,
    };
    Ok(report("rooted", n, Some(r), scan, families::jmax_broom_formula(n, r)?, expected_code, Some(family)))
}

fn check(name: &str, status: CheckStatus, detail: String) -> LemmaCheck {
    LemmaCheck { name: name.to_string(), status, detail }
}

fn pass_or_fail(name: &str, failure: Option<String>, pass_detail: String) -> LemmaCheck {
    match failure {
        None => check(name, CheckStatus::Pass, pass_detail),
        Some(detail) => check(name, CheckStatus::Fail, detail),
    }
}

/// Run every identity check on one tree.
///
/// The hitting times entering the commute and random-target checks come
/// from the linear-solve oracle, not the overlap formula; both identities
/// are algebraic consequences of the formula, so checking them against
/// the formula would be vacuous.
pub fn lemma_suite(t: &Tree) -> Result<Vec<LemmaCheck>, Error> {
    let n = t.n();
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: n });
    }
    let profile = hitting::joining_profile(t);
    let oracle = hitting::oracle_matrix(t)?;
    let dist = t.distances();
    let mut checks = Vec::new();

    let shift = 4 * (n as i128) * (n as i128) - 12 * n as i128 + 8;
    let mut fail = None;
    let mut leaves = 0;
    for y in 0..n {
        if !t.is_leaf(y) {
            continue;
        }
        leaves += 1;
        let anchor = t.neighbors(y)[0];
        let diff = profile[y] as i128 - profile[anchor] as i128;
        if diff != shift {
            fail = Some(format!("J({y}) - J({anchor}) = {diff}, expected {shift}"));
            break;
        }
    }
    checks.push(pass_or_fail(
        "leaf_shift",
        fail,
        format!("J(leaf) - J(anchor) = {shift} at all {leaves} leaves"),
    ));

    let mut fail = None;
    for &(u, v) in t.edges() {
        let cut = t.split_at_edge(u, v)?;
        let lhs = profile[u] as i128 - profile[v] as i128;
        let rhs = (cut.deg_v as i128) * (cut.deg_v as i128) - (cut.deg_u as i128) * (cut.deg_u as i128);
        if lhs != rhs {
            fail = Some(format!("J({u}) - J({v}) = {lhs}, split squares give {rhs}"));
            break;
        }
    }
    checks.push(pass_or_fail(
        "adjacent_comparison",
        fail,
        format!("J(u) - J(v) matches the split-degree squares on all {} edges", n - 1),
    ));

    let (best, argmax) = hitting::jmax(t)?;
    let offender = argmax.iter().find(|&&v| !t.is_leaf(v));
    checks.push(match offender {
        None => check(
            "leaf_is_max",
            CheckStatus::Pass,
            format!("maximum joining time {best} attained only at leaves"),
        ),
        Some(&v) => check(
            "leaf_is_max",
            CheckStatus::Fail,
            format!("non-leaf {v} attains the maximum joining time {best}"),
        ),
    });

    checks.push(if t.is_caterpillar() {
        let spine = crate::spine::SpineDecomposition::decompose(t)?;
        let s = spine.spine();
        let ends = profile[s[0]].max(profile[s[spine.diameter()]]);
        if ends == best {
            check(
                "caterpillar_endpoint_rule",
                CheckStatus::Pass,
                format!("maximum {best} is max(J(v0), J(vd))"),
            )
        } else {
            check(
                "caterpillar_endpoint_rule",
                CheckStatus::Fail,
                format!("spine endpoints reach {ends} but the maximum is {best}"),
            )
        }
    } else {
        check("caterpillar_endpoint_rule", CheckStatus::NotApplicable, String::from("not a caterpillar"))
    });

    let mut fail = None;
    'commute: for u in 0..n {
        for v in (u + 1)..n {
            let sum = &oracle[v].times[u] + &oracle[u].times[v];
            let expected = ratio((2 * (n as i64 - 1)) * dist[u][v] as i64, 1);
            if sum != expected {
                fail = Some(format!(
                    "H({u},{v}) + H({v},{u}) = {}, expected {}",
                    exact_string(&sum),
                    exact_string(&expected)
                ));
                break 'commute;
            }
        }
    }
    checks.push(pass_or_fail(
        "commute_identity",
        fail,
        String::from("H(u,v) + H(v,u) = 2(n-1) d(u,v) for all pairs"),
    ));

    let kappa_scaled: Vec<_> = (0..n)
        .map(|v| {
            (0..n)
                .map(|w| ratio(t.degree(w) as i64, 1) * &oracle[w].times[v])
                .sum::<crate::rational::Rational>()
        })
        .collect();
    let fail = (1..n).find(|&v| kappa_scaled[v] != kappa_scaled[0]).map(|v| {
        format!(
            "random-target time differs between starts 0 and {v}: {} vs {}",
            exact_string(&(kappa_scaled[0].clone() / ratio(2 * (n as i64 - 1), 1))),
            exact_string(&(kappa_scaled[v].clone() / ratio(2 * (n as i64 - 1), 1)))
        )
    });
    let kappa = kappa_scaled[0].clone() / ratio(2 * (n as i64 - 1), 1);
    checks.push(pass_or_fail(
        "random_target_identity",
        fail,
        format!("random-target time = {} from every start", exact_string(&kappa)),
    ));

    Ok(checks)
}

//! Naive integer oracles, independent of the library's residuation code.
//!
//! Vectors are `Vec<Option<i64>>` with `None` standing for -inf.

#![allow(dead_code)]

pub type IVec = Vec<Option<i64>>;

/// Greatest coefficient for each generator with `coef + g <= x`, or `None`
/// for -inf. A zero generator yields `Some(i64::MAX)` (unbounded).
pub fn naive_residuals(gens: &[IVec], x: &IVec) -> Vec<Option<i64>> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let mut best: Option<i64> = Some(i64::MAX);
        for i in 0..x.len() {
            match (g[i], x[i]) {
                (None, _) => {}
                (Some(_), None) => best = None,
                (Some(gi), Some(xi)) => {
                    if let Some(b) = best {
                        if xi - gi < b {
                            best = Some(xi - gi);
                        }
                    }
                }
            }
        }
        out.push(best);
    }
    out
}

/// Coordinate-cover membership test: every finite coordinate of `x` must be
/// attained by some maximally scaled generator.
pub fn naive_member(gens: &[IVec], x: &IVec) -> bool {
    let lam = naive_residuals(gens, x);
    for i in 0..x.len() {
        let Some(xi) = x[i] else { continue };
        let mut covered = false;
        for (k, g) in gens.iter().enumerate() {
            if let (Some(l), Some(gi)) = (lam[k], g[i]) {
                if l != i64::MAX && l + gi == xi {
                    covered = true;
                }
            }
        }
        if !covered {
            return false;
        }
    }
    true
}

/// Greatest element of the cone below `x`, by brute-force double loop.
pub fn naive_project(gens: &[IVec], x: &IVec) -> IVec {
    let lam = naive_residuals(gens, x);
    let mut out = vec![None; x.len()];
    for (k, g) in gens.iter().enumerate() {
        let Some(l) = lam[k] else { continue };
        if l == i64::MAX {
            continue;
        }
        for i in 0..x.len() {
            if let Some(gi) = g[i] {
                let v = l + gi;
                if out[i].is_none_or(|o| v > o) {
                    out[i] = Some(v);
                }
            }
        }
    }
    out
}

fn scale(v: &IVec, f: i64) -> IVec {
    v.iter().map(|c| c.map(|c| c * f)).collect()
}

/// Extremality straight from the definition: `g = gens[k]` fails to be an
/// extreme generator iff for every i in its support there is a cone member
/// `u <= g`, `u != g`, `u_i = g_i`. Such a `u` exists iff lowering one other
/// coordinate j by a half unit keeps coordinate i attained. Data is doubled
/// so the half unit stays integral.
pub fn naive_is_extreme(gens: &[IVec], k: usize) -> bool {
    let gens2: Vec<IVec> = gens.iter().map(|g| scale(g, 2)).collect();
    let g = &gens2[k];
    let support: Vec<usize> = (0..g.len()).filter(|&i| g[i].is_some()).collect();
    if support.is_empty() {
        return false;
    }
    for &i in &support {
        let mut found = false;
        for &j in &support {
            if j == i {
                continue;
            }
            let mut lowered = g.clone();
            lowered[j] = lowered[j].map(|v| v - 1);
            let p = naive_project(&gens2, &lowered);
            if p[i] == g[i] {
                found = true;
                break;
            }
        }
        if !found {
            return true;
        }
    }
    false
}

/// Extreme points of `co(points) + cone(rays)`: listed points whose lift is an
/// extreme generator of the homogenized cone.
pub fn naive_extreme_points(points: &[IVec], rays: &[IVec]) -> Vec<IVec> {
    let mut lifted: Vec<IVec> = points
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(Some(0));
            v
        })
        .collect();
    lifted.extend(rays.iter().map(|r| {
        let mut v = r.clone();
        v.push(None);
        v
    }));
    let mut out: Vec<IVec> = Vec::new();
    for (k, p) in points.iter().enumerate() {
        // duplicates of the same point mask each other; test against the deduped list
        if out.contains(p) {
            continue;
        }
        let mut dedup: Vec<IVec> = Vec::new();
        for (j, g) in lifted.iter().enumerate() {
            if j != k && g == &lifted[k] {
                continue;
            }
            dedup.push(g.clone());
        }
        let idx = dedup.iter().position(|g| g == &lifted[k]).unwrap();
        if naive_is_extreme(&dedup, idx) {
            out.push(p.clone());
        }
    }
    out.sort();
    out
}

pub fn naive_set_member(points: &[IVec], rays: &[IVec], x: &IVec) -> bool {
    let mut lifted: Vec<IVec> = points
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(Some(0));
            v
        })
        .collect();
    lifted.extend(rays.iter().map(|r| {
        let mut v = r.clone();
        v.push(None);
        v
    }));
    let mut xl = x.clone();
    xl.push(Some(0));
    naive_member(&lifted, &xl)
}

//! Toric dual graphs for monomial valuations.
//!
//! For a set of primitive monomial valuations, refines the fan spanned by
//! `(1,0)`, `(0,1)` and the target rays into a smooth subdivision: for every
//! adjacent pair `u, v` with `det(u, v) = d > 1` there is a unique primitive
//! `w` strictly inside the cone with `det(u, w) = 1` and `0 < det(w, v) < d`,
//! and inserting it strictly lowers the determinant, so the refinement
//! terminates. Interior rays become exceptional curves; the relation
//! `v_{i-1} + v_{i+1} = c_i v_i` gives the self-intersections `E_i^2 = -c_i`
//! and adjacent rays meet transversally.
//!
//! This is the bridge between the two computation paths: the divisor
//! `sum c_k E_{p_k}` on the built configuration has the same multiplicity
//! theory as the monomial filtration `cap_k I(v_k)_{n c_k}`; in particular
//! every prime curve `E_p` of a target `v_{a,b}` has volume `1/(ab)`.

use crate::config::ExceptionalConfig;
use crate::oracle::monomial::MonomialValuation;
use crate::oracle::OracleError;

/// A built toric configuration with the curve index of each target.
#[derive(Debug, Clone)]
pub struct ToricBuild {
    pub config: ExceptionalConfig,
    /// For each target valuation, the index of its curve in the config.
    pub prime_index: Vec<usize>,
    /// Interior rays in angular order, one per curve.
    pub rays: Vec<(u64, u64)>,
}

fn det(u: (i64, i64), v: (i64, i64)) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// Extended gcd: returns `(g, s, t)` with `s a + t b = g`.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

/// The unique primitive `w` in the open cone `[u, v]` with `det(u, w) = 1`
/// and `0 < det(w, v) < det(u, v)`.
fn unimodular_insertion(u: (i64, i64), v: (i64, i64)) -> (i64, i64) {
    let d = det(u, v);
    debug_assert!(d > 1);
    // Solve u.0 * y - u.1 * x = 1; u is primitive so a solution exists.
    let (g, s, t) = egcd(u.0, u.1);
    debug_assert_eq!(g, 1);
    let base = (-t, s); // det(u, base) = u.0 * s + u.1 * t = 1
    debug_assert_eq!(det(u, base), 1);
    // Shifting by u moves det(base, v) in steps of d; land in (0, d).
    let r = det(base, v).rem_euclid(d);
    debug_assert!(r != 0, "d > 1 leaves a nonzero residue");
    let k = (r - det(base, v)) / d;
    let w = (base.0 + k * u.0, base.1 + k * u.1);
    debug_assert_eq!(det(u, w), 1);
    debug_assert!(det(w, v) > 0 && det(w, v) < d);
    debug_assert!(w.0 >= 0 && w.1 >= 0);
    w
}

/// Builds the dual graph of the smooth toric surface resolving the given
/// monomial valuations. All targets must be primitive (`gcd(a,b) = 1`).
pub fn toric_config(targets: &[MonomialValuation]) -> Result<ToricBuild, OracleError> {
    if targets.is_empty() {
        return Err(OracleError::NoTargets);
    }
    for t in targets {
        if !t.is_primitive() {
            let (g, _) = t.primitive_part();
            return Err(OracleError::NonPrimitiveTarget {
                a: t.a(),
                b: t.b(),
                gcd: g,
            });
        }
    }

    // Rays in angular order from (1,0) to (0,1).
    let mut rays: Vec<(i64, i64)> = vec![(1, 0), (0, 1)];
    for t in targets {
        rays.push((t.a() as i64, t.b() as i64));
    }
    rays.sort_by(|&u, &v| det(v, u).cmp(&0));
    rays.dedup();

    // Refine until every adjacent determinant is 1.
    let mut i = 0;
    while i + 1 < rays.len() {
        let d = det(rays[i], rays[i + 1]);
        debug_assert!(d >= 1);
        if d == 1 {
            i += 1;
        } else {
            let w = unimodular_insertion(rays[i], rays[i + 1]);
            rays.insert(i + 1, w);
        }
    }

    let interior = &rays[1..rays.len() - 1];
    let s = interior.len();
    debug_assert!(s >= 1, "targets are interior to the first quadrant");

    let mut gram = vec![vec![0i64; s]; s];
    for (idx, &ray) in interior.iter().enumerate() {
        let prev = rays[idx];
        let next = rays[idx + 2];
        let sum = (prev.0 + next.0, prev.1 + next.1);
        // v_{i-1} + v_{i+1} = c v_i with c a positive integer.
        let c = if ray.0 != 0 { sum.0 / ray.0 } else { sum.1 / ray.1 };
        assert!(
            c >= 1 && sum == (c * ray.0, c * ray.1),
            "adjacent rays fail the smooth fan relation"
        );
        gram[idx][idx] = -c;
        if idx + 1 < s {
            gram[idx][idx + 1] = 1;
            gram[idx + 1][idx] = 1;
        }
    }

    let labels = interior
        .iter()
        .map(|&(a, b)| format!("E({a},{b})"))
        .collect();
    let config = ExceptionalConfig::new(labels, gram, vec![(0..s).collect()], vec![1])
        .expect("toric fan yields a valid configuration");

    let prime_index = targets
        .iter()
        .map(|t| {
            interior
                .iter()
                .position(|&(a, b)| (a as u64, b as u64) == (t.a(), t.b()))
                .expect("every target ray is interior")
        })
        .collect();

    Ok(ToricBuild {
        config,
        prime_index,
        rays: interior.iter().map(|&(a, b)| (a as u64, b as u64)).collect(),
    })
}

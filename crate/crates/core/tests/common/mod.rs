//! Oracles shared by the integration tests. Nothing here calls the engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Ranks of `π_r ⊗ ℚ` for `2 <= r <= max_degree` when `b2 >= 2`, derived from
/// the Poincaré series `1 / (1 − b2·t + t²)` of `H_*(ΩM; ℚ)`.
///
/// The loop homology is the enveloping algebra of the rational homotopy Lie
/// algebra, so by Poincaré–Birkhoff–Witt its series is
/// `∏_{i odd} (1 + tⁱ)^{r_i} / ∏_{i even} (1 − tⁱ)^{r_i}` with
/// `r_i = rank π_{i+1}`. Solving for the exponents one degree at a time
/// gives the ranks.
pub fn loop_space_ranks(b2: i128, max_degree: u32) -> BTreeMap<u32, u64> {
    assert!(b2 >= 2, "series holds for b2 >= 2");
    let top = max_degree as usize - 1;
    // target coefficients a_k of 1 / (1 - b2 t + t^2)
    let mut target = vec![0i128; top + 1];
    target[0] = 1;
    for k in 1..=top {
        target[k] = b2 * target[k - 1] - if k >= 2 { target[k - 2] } else { 0 };
    }
    let mut series = vec![0i128; top + 1];
    series[0] = 1;
    let mut ranks = BTreeMap::new();
    for i in 1..=top {
        let r = target[i] - series[i];
        assert!(r >= 0, "negative rank in degree {}", i + 1);
        for _ in 0..r {
            multiply_factor(&mut series, i);
        }
        ranks.insert(i as u32 + 1, r as u64);
    }
    ranks
}

/// Multiplies by `1 + tⁱ` (i odd) or `1 / (1 − tⁱ)` (i even), truncated.
fn multiply_factor(series: &mut [i128], i: usize) {
    let n = series.len();
    if i % 2 == 1 {
        for k in (i..n).rev() {
            series[k] += series[k - i];
        }
    } else {
        for k in i..n {
            series[k] += series[k - i];
        }
    }
}

/// Closed-form ranks, typed in independently of the library.
pub fn closed_form(b2: u64) -> BTreeMap<u32, u64> {
    match b2 {
        0 => BTreeMap::from([(4, 1), (7, 1)]),
        1 => BTreeMap::from([(2, 1), (5, 1)]),
        2 => BTreeMap::from([(2, 2), (3, 2)]),
        n => {
            let mut t = BTreeMap::from([(2, n), (3, n * (n + 1) / 2 - 1), (4, n * (n * n - 4) / 3)]);
            if n == 3 {
                t.insert(5, 10);
            }
            t
        }
    }
}

/// All `(p, q)` with `p + q = b2`.
pub fn splits(b2: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=b2).map(move |p| (p, b2 - p))
}

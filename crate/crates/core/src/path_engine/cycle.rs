use crate::hyperbolicity::gap_of_two_largest;

pub const DEFAULT_CYCLE_CAP: usize = 64;

/// `δ(C_L)` with an optimal quadruple of cycle positions (`None` when
/// `L < 4`). Exhaustive with position 0 fixed up to `cap`, closed form above.
pub fn cycle_hyperbolicity_with(len: usize, cap: usize) -> (u64, Option<[usize; 4]>) {
    if len < 4 {
        return (0, None);
    }
    if len <= cap {
        cycle_exhaustive(len)
    } else {
        cycle_closed_form(len)
    }
}

pub fn cycle_hyperbolicity(len: usize) -> u64 {
    cycle_hyperbolicity_with(len, DEFAULT_CYCLE_CAP).0
}

pub(crate) fn cycle_exhaustive(len: usize) -> (u64, Option<[usize; 4]>) {
    let d = |i: usize, j: usize| {
        let k = i.abs_diff(j);
        k.min(len - k) as u64
    };
    let mut best = (0, None);
    for b in 1..len {
        for c in b + 1..len {
            for e in c + 1..len {
                let delta = gap_of_two_largest(d(0, b) + d(c, e), d(0, c) + d(b, e), d(0, e) + d(b, c));
                if delta > best.0 {
                    best = (delta, Some([0, b, c, e]));
                }
            }
        }
    }
    best
}

/// `L = 4k + r`: `δ = 2k`, one less when `r = 1`; attained by spreading the
/// quadruple as evenly as possible.
pub(crate) fn cycle_closed_form(len: usize) -> (u64, Option<[usize; 4]>) {
    if len < 4 {
        return (0, None);
    }
    let (k, r) = (len / 4, len % 4);
    let delta = 2 * k as u64 - u64::from(r == 1);
    let quad = [0, k, 2 * k + usize::from(r == 3), 3 * k + usize::from(r >= 2) + usize::from(r == 3)];
    (delta, Some(quad))
}

//! Fixtures shared by the benchmarks.

use corepath::{Family, FamilySpec, PathWord, Step};

/// A deterministic free Motzkin word with `m` non-flat and `r` flat steps:
/// a zigzag through the strip, padded with flats.
pub fn zigzag_free(m: usize, r: usize) -> PathWord {
    let start = (m % 2) as i64;
    let mut steps = Vec::with_capacity(m + r);
    let mut h = start;
    let mut flats = r;
    for i in 0..m {
        let remaining = (m - i) as i64;
        let rising = (i / 3) % 2 == 0;
        let step = if h >= remaining || (!rising && h > -remaining) {
            Step::Down
        } else {
            Step::Up
        };
        steps.push(step);
        h += step.displacement();
        if flats > 0 && i % 2 == 1 {
            steps.push(Step::Flat);
            flats -= 1;
        }
    }
    steps.extend(std::iter::repeat_n(Step::Flat, flats));
    PathWord::new(steps)
}

/// All members of every `F̄(m, r, k)` with `m + r = len`.
pub fn free_words_of_length(len: usize) -> Vec<PathWord> {
    (0..=len)
        .flat_map(|m| (0..=m + 1).map(move |k| FamilySpec::new(Family::FreeMotzkin, m, len - m, k)))
        .flat_map(corepath::counting::enumerate)
        .collect()
}

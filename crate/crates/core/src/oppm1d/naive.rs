use crate::stats::Counters;

/// Order-isomorphism straight from the definition: every pair of positions
/// must compare the same way in both strings.
pub fn isomorphic_all_pairs(s: &[i64], t: &[i64]) -> bool {
    s.len() == t.len()
        && (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[i].cmp(&s[j]) == t[i].cmp(&t[j])))
}

/// Checks every window against the pattern pair by pair. Quadratic in the
/// pattern length per window.
pub fn naive_match_1d(text: &[i64], pattern: &[i64]) -> Vec<usize> {
    naive_match_1d_counted(text, pattern, &mut Counters::default())
}

pub fn naive_match_1d_counted(
    text: &[i64],
    pattern: &[i64],
    counters: &mut Counters,
) -> Vec<usize> {
    let m = pattern.len();
    if m == 0 || m > text.len() {
        return Vec::new();
    }
    (0..=text.len() - m)
        .filter(|&x| {
            let w = &text[x..x + m];
            (0..m).all(|i| {
                (i + 1..m).all(|j| {
                    counters.scan_comparisons += 1;
                    pattern[i].cmp(&pattern[j]) == w[i].cmp(&w[j])
                })
            })
        })
        .collect()
}

use crate::error::{OppmError, Result};
use crate::opcore::PrevNext;
use crate::stats::Counters;

/// Order-preserving Knuth-Morris-Pratt matcher.
///
/// `fail[q - 1]` is the length of the longest proper border of `P[..q]`:
/// the largest `b < q` with `P[..b]` order-isomorphic to `P[q - b..q]`.
#[derive(Debug, Clone)]
pub struct KmpMatcher {
    pn: PrevNext,
    fail: Vec<usize>,
}

impl KmpMatcher {
    pub fn new(pattern: &[i64]) -> Result<Self> {
        if pattern.is_empty() {
            return Err(OppmError::EmptyPattern);
        }
        let pn = PrevNext::new(pattern);
        let m = pattern.len();
        let mut fail = vec![0; m];
        let mut q = 0;
        for i in 1..m {
            // q = border of P[..i]; try to extend it by P[i]
            loop {
                if pn.extends(&pattern[i - q..], q, &mut 0) {
                    q += 1;
                    break;
                }
                q = fail[q - 1];
            }
            fail[i] = q;
        }
        Ok(KmpMatcher { pn, fail })
    }

    pub fn failure(&self) -> &[usize] {
        &self.fail
    }

    pub fn find(&self, text: &[i64]) -> Vec<usize> {
        self.find_counted(text, &mut Counters::default())
    }

    pub fn find_counted(&self, text: &[i64], counters: &mut Counters) -> Vec<usize> {
        let m = self.fail.len();
        let mut out = Vec::new();
        let mut q = 0;
        for t in 0..text.len() {
            loop {
                if self
                    .pn
                    .extends(&text[t - q..], q, &mut counters.scan_comparisons)
                {
                    q += 1;
                    break;
                }
                q = self.fail[q - 1];
            }
            if q == m {
                out.push(t + 1 - m);
                q = self.fail[m - 1];
            }
        }
        out
    }
}

pub fn kmp_match_1d(text: &[i64], pattern: &[i64]) -> Result<Vec<usize>> {
    Ok(KmpMatcher::new(pattern)?.find(text))
}

//! Breadth-first enumeration of a right-angled Coxeter group through its
//! Tits representation.
//!
//! The representation on Z^n uses the bilinear form `B(eᵢ,eᵢ) = 1`,
//! `B(eᵢ,eⱼ) = 0` for commuting generators and `-1` otherwise; generator `i`
//! acts by `v ↦ v - 2B(eᵢ,v)eᵢ`. It is faithful, so group elements are
//! identified with integer matrices and no rewriting is involved.

use std::collections::HashMap;

use smallcover::racg::RacgPresentation;

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug)]
pub struct CapExceeded(pub usize);

impl std::fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cayley ball exceeds {} elements", self.0)
    }
}

pub struct CayleyOracle {
    pub generators: usize,
    /// Distance from the identity.
    pub depth: Vec<usize>,
    /// ShortLex-least word of each element.
    pub least_word: Vec<Vec<usize>>,
    /// `right[x][s]`: the element `x·s`, or `usize::MAX` beyond the radius.
    pub right: Vec<Vec<usize>>,
    pub radius: usize,
    /// Whether the search ran out of new elements before the radius.
    pub exhausted: bool,
}

type Matrix = Vec<i64>;

fn form(w: &RacgPresentation, i: usize, j: usize) -> i64 {
    if i == j {
        1
    } else if w.commute(i, j) {
        0
    } else {
        -1
    }
}

/// `m·σ_s`: column `j` becomes `m[:,j] - 2B(s,j)·m[:,s]`.
fn times_generator(w: &RacgPresentation, m: &Matrix, s: usize) -> Matrix {
    let n = w.generator_count();
    let mut out = m.clone();
    for j in 0..n {
        let b = form(w, s, j);
        if b != 0 {
            for r in 0..n {
                out[r * n + j] -= 2 * b * m[r * n + s];
            }
        }
    }
    out
}

impl CayleyOracle {
    /// Elements within `radius` of the identity, with a hard element cap.
    pub fn build(w: &RacgPresentation, radius: usize, cap: usize) -> Result<Self, CapExceeded> {
        let n = w.generator_count();
        let mut identity = vec![0i64; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        let mut index: HashMap<Matrix, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut matrices = vec![identity];
        let mut depth = vec![0];
        let mut least_word = vec![Vec::new()];
        let mut right: Vec<Vec<usize>> = vec![vec![usize::MAX; n]];
        let mut level = vec![0usize];
        let mut exhausted = false;
        for d in 0..=radius {
            let mut next = Vec::new();
            for &x in &level {
                for s in 0..n {
                    let m = times_generator(w, &matrices[x], s);
                    let y = match index.get(&m) {
                        Some(&y) => y,
                        None if d < radius => {
                            if matrices.len() >= cap {
                                return Err(CapExceeded(cap));
                            }
                            let y = matrices.len();
                            index.insert(m.clone(), y);
                            matrices.push(m);
                            depth.push(d + 1);
                            let mut word = least_word[x].clone();
                            word.push(s);
                            least_word.push(word);
                            right.push(vec![usize::MAX; n]);
                            next.push(y);
                            y
                        }
                        None => continue,
                    };
                    right[x][s] = y;
                }
            }
            if next.is_empty() && d < radius {
                exhausted = true;
                break;
            }
            level = next;
        }
        Ok(CayleyOracle {
            generators: n,
            depth,
            least_word,
            right,
            radius,
            exhausted,
        })
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    /// Element reached by a word; panics beyond the radius.
    pub fn element_of(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |x, &s| {
            let y = self.right[x][s];
            assert_ne!(y, usize::MAX, "word leaves the enumerated ball");
            y
        })
    }
}

/// All words of length at most `max_len` over `n` letters, shortest first.
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for s in 0..n {
                let mut w = out[i].clone();
                w.push(s);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

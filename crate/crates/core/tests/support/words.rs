//! Word-problem checks against the Cayley oracle.

use rand::{Rng, SeedableRng};
use smallcover::racg::{equal, reduce, GroupWord, RacgPresentation};

use super::cayley::{all_words, CayleyOracle};

/// Every word up to `max_len` reduces to the ShortLex-least geodesic found
/// by the oracle. Returns the number of words checked.
pub fn check_normal_forms(
    w: &RacgPresentation,
    oracle: &CayleyOracle,
    max_len: usize,
) -> Result<usize, String> {
    let words = all_words(w.generator_count(), max_len);
    for word in &words {
        let nf = reduce(w, &GroupWord::new(word.iter().copied())).map_err(|e| e.to_string())?;
        let x = oracle.element_of(word);
        if nf.letters() != oracle.least_word[x].as_slice() {
            return Err(format!(
                "{}: {word:?} reduces to {:?}, oracle says {:?}",
                w.name(),
                nf.letters(),
                oracle.least_word[x]
            ));
        }
    }
    Ok(words.len())
}

/// `equal` on every pair of words up to `max_len` against oracle identity.
/// Returns the number of pairs checked.
pub fn check_all_pairs(
    w: &RacgPresentation,
    oracle: &CayleyOracle,
    max_len: usize,
) -> Result<u64, String> {
    let words: Vec<GroupWord> = all_words(w.generator_count(), max_len)
        .into_iter()
        .map(GroupWord::new)
        .collect();
    let ids: Vec<usize> = words.iter().map(|x| oracle.element_of(x.letters())).collect();
    let mut pairs = 0u64;
    for (a, wa) in words.iter().enumerate() {
        for (b, wb) in words.iter().enumerate() {
            let same = equal(w, wa, wb).map_err(|e| e.to_string())?;
            if same != (ids[a] == ids[b]) {
                return Err(format!("{}: equal({wa}, {wb}) = {same}", w.name()));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> GroupWord {
    let len = rng.random_range(0..=max_len);
    GroupWord::new((0..len).map(|_| rng.random_range(0..n)))
}

/// `equal` on random pairs up to `max_len` letters. Half of the pairs are
/// built to be equal by inserting cancelling or commuting letters.
pub fn check_random_pairs(
    w: &RacgPresentation,
    oracle: &CayleyOracle,
    count: usize,
    max_len: usize,
    seed: u64,
) -> Result<usize, String> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let n = w.generator_count();
    for i in 0..count {
        let a = random_word(&mut rng, n, max_len);
        let b = if i % 2 == 0 {
            random_word(&mut rng, n, max_len)
        } else {
            // Same element as `a`: rewrite with the oracle's normal form.
            GroupWord::new(oracle.least_word[oracle.element_of(a.letters())].iter().copied())
        };
        let same = equal(w, &a, &b).map_err(|e| e.to_string())?;
        let expected = oracle.element_of(a.letters()) == oracle.element_of(b.letters());
        if same != expected {
            return Err(format!("{}: equal({a}, {b}) = {same}", w.name()));
        }
    }
    Ok(count)
}

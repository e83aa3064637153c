//! Random corpora, property suites and timing used by the acceptance tests and the CLI.
//!
//! Every generator takes an explicit seed so that runs are reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::garside::DualBraid;
use crate::ladders::verify_splitting_ladders;
use crate::oracle::{equivalent, is_trivial};
use crate::reversing::{push_through_splitting, reverse_all_traced, DangerousWord};
use crate::rotating::{splitting_of, Splitting};
use crate::sigmadef::{compare, nf, sign, CaseTag};
use crate::words::{Letter, SigmaClass, Word};

/// Seeded generator for one `(seed, n)` pair.
pub fn rng_for(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32))
}

/// Uniform signed Artin word of exactly `len` letters.
pub fn random_sigma_word(rng: &mut impl Rng, n: usize, len: usize) -> Word {
    let letters = (0..len)
        .map(|_| {
            let l = Letter::sigma(rng.gen_range(1..n));
            if rng.gen_bool(0.5) {
                l.inverse()
            } else {
                l
            }
        })
        .collect();
    Word::from_letters(n, letters)
}

/// Uniform positive band word of exactly `len` letters.
pub fn random_band_word(rng: &mut impl Rng, n: usize, len: usize) -> Word {
    let letters = (0..len)
        .map(|_| {
            let p = rng.gen_range(1..n);
            Letter::a(p, rng.gen_range(p + 1..=n))
        })
        .collect();
    Word::from_letters(n, letters)
}

/// `count` signed Artin words with lengths uniform in `0..=maxlen`.
pub fn sigma_corpus(n: usize, count: usize, maxlen: usize, seed: u64) -> Vec<Word> {
    let mut rng = rng_for(seed, n);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=maxlen);
            random_sigma_word(&mut rng, n, len)
        })
        .collect()
}

/// `sigma_{n-1} sigma_{n-2}^{-2} sigma_{n-3}^{2} ... sigma_1^{+-2} ... sigma_{n-2}^{+-2} sigma_{n-1}^-1`,
/// of length `4(n - 2)`, whose shortest sigma-definite expression has at least `n^2 - n - 2` letters.
pub fn lower_bound_witness(n: usize) -> Word {
    assert!(n >= 3, "the witness needs at least three strands");
    let mut letters = vec![Letter::sigma(n - 1)];
    let power = |letters: &mut Vec<Letter>, j: usize, negative: bool| {
        let l = if negative { Letter::sigma(j).inverse() } else { Letter::sigma(j) };
        letters.extend([l, l]);
    };
    for j in (1..=n - 2).rev() {
        power(&mut letters, j, (n - 1 - j) % 2 == 1);
    }
    for j in 2..=n - 2 {
        power(&mut letters, j, (n - 1 - j).is_multiple_of(2));
    }
    letters.push(Letter::sigma(n - 1).inverse());
    Word::from_letters(n, letters)
}

/// Outcome of one property suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> SuiteReport {
        SuiteReport { name: name.into(), ..SuiteReport::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(detail());
        } else if !ok {
            self.failures.push(String::new());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks, {} failures)", self.name, self.checked, self.failures.len())?;
        for d in self.failures.iter().filter(|d| !d.is_empty()).take(5) {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

/// Statistics gathered while running [`nf_suite`].
#[derive(Clone, Debug, Default)]
pub struct NfStats {
    pub representative: SuiteReport,
    pub definite: SuiteReport,
    pub lengths: SuiteReport,
    /// How often each case tag appeared, over all levels.
    pub cases: BTreeMap<CaseTag, usize>,
}

impl NfStats {
    fn new() -> NfStats {
        NfStats {
            representative: SuiteReport::new("representative"),
            definite: SuiteReport::new("sigma-definite"),
            lengths: SuiteReport::new("length bounds"),
            cases: BTreeMap::new(),
        }
    }

    pub fn reports(&self) -> [&SuiteReport; 3] {
        [&self.representative, &self.definite, &self.lengths]
    }

    pub fn merge(&mut self, other: NfStats) {
        for (mine, theirs) in [
            (&mut self.representative, other.representative),
            (&mut self.definite, other.definite),
            (&mut self.lengths, other.lengths),
        ] {
            mine.checked += theirs.checked;
            mine.failures.extend(theirs.failures);
        }
        for (c, k) in other.cases {
            *self.cases.entry(c).or_default() += k;
        }
    }

    /// Case tags never observed.
    pub fn missing_cases(&self) -> Vec<CaseTag> {
        CaseTag::ALL.into_iter().filter(|c| !self.cases.contains_key(c)).collect()
    }
}

/// Runs the normal form checks on each word, with its Artin length as `l`.
pub fn nf_suite(words: &[Word]) -> NfStats {
    let mut stats = NfStats::new();
    for w in words {
        let n = w.strands();
        let ell = w.sigma_len();
        let r = match nf(w) {
            Ok(r) => r,
            Err(e) => {
                stats.representative.check(false, || format!("`{w}`: {e}"));
                continue;
            }
        };
        for (_, c) in &r.cases {
            *stats.cases.entry(*c).or_default() += 1;
        }
        stats.representative.check(equivalent(w, &r.word), || format!("`{w}` -> `{}`", r.word));
        let class = r.sigma().classify_sigma();
        stats.definite.check(!matches!(class, SigmaClass::Mixed(_)), || format!("`{w}` -> {class}"));
        let trivial = is_trivial(w);
        stats
            .definite
            .check((r.sign() == 0) == trivial, || format!("`{w}`: sign {} but trivial = {trivial}", r.sign()));
        stats.lengths.check(r.word.len() <= 3 * (n - 1) * ell, || format!("`{w}`: |NF| = {}", r.word.len()));
        stats.lengths.check(r.sigma().len() <= 6 * (n - 1) * (n - 1) * ell, || {
            format!("`{w}`: |NF sigma| = {}", r.sigma().len())
        });
        stats.lengths.check(r.rnf.n_length() <= (n - 1) * ell, || format!("`{w}`: |beta|_n = {}", r.rnf.n_length()));
        stats.lengths.check(r.word.len() <= 3 * r.rnf.n_length(), || format!("`{w}`: |NF| > 3 |beta|_n"));
    }
    stats
}

/// Ladder structure of splittings, wall bounds and reversing soundness on random positive braids.
pub fn ladder_suite(n: usize, count: usize, maxlen: usize, seed: u64) -> [SuiteReport; 3] {
    let mut ladders = SuiteReport::new(format!("ladders n={n}"));
    let mut walls = SuiteReport::new(format!("walls n={n}"));
    let mut steps = SuiteReport::new(format!("reversing steps n={n}"));
    let mut rng = rng_for(seed.wrapping_add(0x1add), n);
    for _ in 0..count {
        let len = rng.gen_range(1..=maxlen);
        let w = random_band_word(&mut rng, n, len);
        let beta = DualBraid::from_word(&w).expect("positive band word");
        let s = splitting_of(&beta);
        let report = verify_splitting_ladders(&s);
        ladders.check(report.passed(), || format!("`{w}`: {}", report.failures().next().unwrap().detail));
        if s.breadth() < 3 {
            continue;
        }
        let u = random_dangerous(&mut rng, &s);
        match push_through_splitting(&u, &s, 3) {
            Ok(_) => walls.check(true, String::new),
            Err(e) => walls.check(false, || format!("`{w}` with `{u}`: {e}")),
        }
        check_steps(&mut steps, &u, &s);
    }
    [ladders, walls, steps]
}

/// A random `w_b^#`-dangerous word of length at most 3.
fn random_dangerous(rng: &mut impl Rng, s: &Splitting) -> DangerousWord {
    let n = s.strands();
    let b = s.breadth();
    let x = s.entry(b).last().expect("top entry is nonempty").span().0;
    if x + 3 > n {
        return DangerousWord::empty(n - 1);
    }
    let len = rng.gen_range(1..=3);
    let mut indices: Vec<usize> = (1..len).map(|_| rng.gen_range(x..=n - 3)).collect();
    indices.sort_unstable_by(|a, b| b.cmp(a));
    indices.push(x);
    DangerousWord::new(n - 1, indices).expect("indices are in range and sorted")
}

/// Every step taken while reversing `phi(u) w_{b-1}` rewrites a subword into an equivalent one.
fn check_steps(report: &mut SuiteReport, u: &DangerousWord, s: &Splitting) {
    let n = s.strands();
    let mut input = u.rotate_up().to_word();
    input.extend_from(&s.entry(s.breadth() - 1).widen(n));
    let Ok((_, trace)) = reverse_all_traced(&input) else {
        report.check(false, || format!("`{input}` did not terminate"));
        return;
    };
    for step in trace {
        let lhs = Word::from_letters(n, step.lhs.to_vec());
        let rhs = Word::from_letters(n, step.rhs.clone());
        report.check(equivalent(&lhs, &rhs), || format!("step {step}"));
    }
}

/// `sign(w^-1) = -sign(w)`.
pub fn antisymmetry_suite(words: &[Word]) -> SuiteReport {
    let mut report = SuiteReport::new("antisymmetry");
    for w in words {
        match (sign(w), sign(&w.inverse())) {
            (Ok(a), Ok(b)) => report.check(a == -b, || format!("`{w}`: {a} and {b}")),
            (Err(e), _) | (_, Err(e)) => report.check(false, || format!("`{w}`: {e}")),
        }
    }
    report
}

/// `compare` is transitive on triples, and consistent with the oracle on ties.
pub fn transitivity_suite(triples: &[[Word; 3]]) -> SuiteReport {
    use std::cmp::Ordering::*;
    let mut report = SuiteReport::new("transitivity");
    for [a, b, c] in triples {
        let cmp = |x: &Word, y: &Word| compare(x, y).expect("compare is total");
        let (ab, bc, ac) = (cmp(a, b), cmp(b, c), cmp(a, c));
        let expected = match (ab, bc) {
            (Equal, o) | (o, Equal) => Some(o),
            (x, y) if x == y => Some(x),
            _ => None,
        };
        report.check(expected.is_none_or(|o| o == ac), || format!("`{a}` {ab:?} `{b}` {bc:?} `{c}` but {ac:?}"));
        report.check((ab == Equal) == equivalent(a, b), || format!("`{a}` vs `{b}`: {ab:?}"));
    }
    report
}

/// Random triples of short words on `n` strands, with some ties built in.
pub fn random_triples(n: usize, count: usize, maxlen: usize, seed: u64) -> Vec<[Word; 3]> {
    let mut rng = rng_for(seed.wrapping_add(0x3), n);
    (0..count)
        .map(|_| {
            let mut gen = || {
                let len = rng.gen_range(0..=maxlen);
                random_sigma_word(&mut rng, n, len)
            };
            let (a, b, c) = (gen(), gen(), gen());
            [a, b, c]
        })
        .collect()
}

/// Median time of `nf` over `reps` random words of each length.
pub fn bench(n: usize, lengths: &[usize], reps: usize, seed: u64) -> Vec<(usize, Duration)> {
    let mut rng = rng_for(seed.wrapping_add(0xbe), n);
    lengths
        .iter()
        .map(|&len| {
            let mut times: Vec<Duration> = (0..reps.max(1))
                .map(|_| {
                    let w = random_sigma_word(&mut rng, n, len);
                    let start = Instant::now();
                    let r = nf(&w);
                    let elapsed = start.elapsed();
                    std::hint::black_box(r).expect("normal form of a random word");
                    elapsed
                })
                .collect();
            times.sort_unstable();
            (len, times[times.len() / 2])
        })
        .collect()
}

/// Least squares slope of `log t` against `log len`.
pub fn loglog_slope(points: &[(usize, Duration)]) -> f64 {
    let xy: Vec<(f64, f64)> = points.iter().map(|&(l, t)| ((l as f64).ln(), t.as_secs_f64().max(1e-9).ln())).collect();
    let k = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / k;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_shape() {
        assert_eq!(lower_bound_witness(4).to_string(), "s3 s2^-2 s1^2 s2^2 s3^-1");
        assert_eq!(lower_bound_witness(5).to_string(), "s4 s3^-2 s2^2 s1^-2 s2^-2 s3^2 s4^-1");
        for n in 3..8 {
            assert_eq!(lower_bound_witness(n).len(), 4 * (n - 2));
        }
    }

    #[test]
    fn corpora_are_reproducible() {
        assert_eq!(sigma_corpus(4, 10, 20, 1), sigma_corpus(4, 10, 20, 1));
        assert_ne!(sigma_corpus(4, 10, 20, 1), sigma_corpus(4, 10, 20, 2));
        assert!(sigma_corpus(5, 50, 7, 3).iter().all(|w| w.len() <= 7 && w.strands() == 5));
    }

    #[test]
    fn slope_of_exact_powers() {
        let pts: Vec<(usize, Duration)> =
            [10usize, 20, 40, 80].iter().map(|&l| (l, Duration::from_nanos((l * l) as u64 * 1000))).collect();
        assert!((loglog_slope(&pts) - 2.0).abs() < 1e-6);
    }

    #[test]
    fn small_suites_pass() {
        let stats = nf_suite(&sigma_corpus(4, 60, 12, 5));
        assert!(stats.reports().iter().all(|r| r.passed()), "{:?}", stats.reports());
        for r in ladder_suite(5, 30, 15, 5) {
            assert!(r.passed(), "{r}");
        }
    }
}

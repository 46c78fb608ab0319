//! Windowed subword sets, complexity, recurrence and periodicity fitting.
//!
//! Every quantity defined on an infinite word is evaluated on a finite
//! prefix, the *horizon*. Results carry their horizon so callers can tell a
//! proof from an estimate.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::word::{matches_at, periodic_from, Alphabet, FullWord, PartialWord, Symbol, DEFAULT_EXPANSION_CAP};

/// Largest candidate count the brute-force oracle will enumerate.
pub const DEFAULT_ORACLE_CAP: u128 = 1 << 20;

/// Full words of one length compatible with some factor of a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubwordSet {
    pub n: usize,
    pub horizon: usize,
    pub words: BTreeSet<FullWord>,
}

impl SubwordSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, u: &FullWord) -> bool {
        self.words.contains(u)
    }

    pub fn is_subset(&self, other: &SubwordSet) -> bool {
        self.words.is_subset(&other.words)
    }

    pub fn render(&self, alphabet: &Alphabet) -> Vec<String> {
        self.words.iter().map(|u| u.render(alphabet)).collect()
    }
}

/// Start positions of every length-`n` subword of a window.
#[derive(Clone, Debug)]
pub struct OccurrenceIndex {
    n: usize,
    horizon: usize,
    occurrences: BTreeMap<FullWord, Vec<usize>>,
}

fn check_length(w: &PartialWord, n: usize) -> Result<()> {
    if n == 0 || n > w.len() {
        return Err(Error::Argument(format!("subword length {n} must lie in 1..={}", w.len())));
    }
    Ok(())
}

impl OccurrenceIndex {
    /// Expands every length-`n` factor of `w` into its completions.
    pub fn build(w: &PartialWord, n: usize, alphabet: &Alphabet, cap: usize) -> Result<Self> {
        check_length(w, n)?;
        let symbols = w.symbols();
        let mut occurrences: BTreeMap<FullWord, Vec<usize>> = BTreeMap::new();
        let k = alphabet.size() as u8;
        let mut buf = vec![0u8; n];
        let mut holes = Vec::with_capacity(n);
        for i in 0..=w.len() - n {
            holes.clear();
            for (j, s) in symbols[i..i + n].iter().enumerate() {
                match s {
                    Symbol::Letter(l) => buf[j] = *l,
                    Symbol::Hole => {
                        buf[j] = 0;
                        holes.push(j);
                    }
                }
            }
            if holes.len() > cap {
                return Err(Error::ExpansionCap { holes: holes.len(), cap });
            }
            loop {
                occurrences.entry(FullWord(buf.clone())).or_default().push(i);
                let mut carry = true;
                for &h in holes.iter().rev() {
                    if buf[h] + 1 < k {
                        buf[h] += 1;
                        carry = false;
                        break;
                    }
                    buf[h] = 0;
                }
                if carry {
                    break;
                }
            }
        }
        Ok(OccurrenceIndex { n, horizon: w.len(), occurrences })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.occurrences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occurrences.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = (&FullWord, &[usize])> {
        self.occurrences.iter().map(|(u, o)| (u, o.as_slice()))
    }

    pub fn positions(&self, u: &FullWord) -> Option<&[usize]> {
        self.occurrences.get(u).map(Vec::as_slice)
    }

    pub fn subword_set(&self) -> SubwordSet {
        SubwordSet { n: self.n, horizon: self.horizon, words: self.occurrences.keys().cloned().collect() }
    }

    /// Words with exactly one occurrence, in lexicographic order.
    pub fn single_occurrences(&self) -> Vec<(FullWord, usize)> {
        self.occurrences
            .iter()
            .filter(|(_, o)| o.len() == 1)
            .map(|(u, o)| (u.clone(), o[0]))
            .collect()
    }

    /// Words with an occurrence starting at or after `cutoff`.
    pub fn recurrent(&self, cutoff: usize) -> SubwordSet {
        let words = self
            .occurrences
            .iter()
            .filter(|(_, o)| o.last().is_some_and(|&p| p >= cutoff))
            .map(|(u, _)| u.clone())
            .collect();
        SubwordSet { n: self.n, horizon: self.horizon, words }
    }

    /// Smallest `m` such that every length-`m` factor of the window contains
    /// every subword. Always at most the horizon.
    pub fn recurrence_window(&self) -> usize {
        let n = self.n;
        let l = self.horizon;
        let mut m = n;
        for occ in self.occurrences.values() {
            let first = occ[0] + n;
            let last = l - occ[occ.len() - 1];
            let inner = occ.windows(2).map(|p| p[1] - p[0] - 1 + n).max().unwrap_or(0);
            m = m.max(first).max(last).max(inner);
        }
        m
    }

    /// Whether every word occurring in `[start, start + len)` occurs at least
    /// twice there.
    pub fn all_repeat_within(&self, start: usize, len: usize) -> bool {
        if len < self.n {
            return true;
        }
        let last_start = start + len - self.n;
        self.occurrences.values().all(|occ| {
            let lo = occ.partition_point(|&p| p < start);
            let hi = occ.partition_point(|&p| p <= last_start);
            hi - lo != 1
        })
    }
}

/// `Sub_w(n)` of a finite partial word, by expanding each factor.
pub fn subword_set(w: &PartialWord, n: usize, alphabet: &Alphabet, cap: usize) -> Result<SubwordSet> {
    check_length(w, n)?;
    let mut words = BTreeSet::new();
    for i in 0..=w.len() - n {
        let f = PartialWord::new(w.symbols()[i..i + n].to_vec());
        words.extend(f.completions(alphabet, cap)?);
    }
    Ok(SubwordSet { n, horizon: w.len(), words })
}

/// `Sub_w(n)` by testing each of the `k^n` candidate words at every
/// alignment. Slow on purpose; it is the correctness reference.
pub fn brute_force_subword_set(w: &PartialWord, n: usize, alphabet: &Alphabet, oracle_cap: u128) -> Result<SubwordSet> {
    check_length(w, n)?;
    let candidates = alphabet.word_count(n);
    if candidates > oracle_cap {
        return Err(Error::OracleCap { candidates, cap: oracle_cap });
    }
    let k = alphabet.size() as u128;
    let mut words = BTreeSet::new();
    for code in 0..candidates {
        let mut letters = vec![0u8; n];
        let mut c = code;
        for slot in letters.iter_mut().rev() {
            *slot = (c % k) as u8;
            c /= k;
        }
        if (0..=w.len() - n).any(|i| matches_at(&letters, w.symbols(), i)) {
            words.insert(FullWord(letters));
        }
    }
    Ok(SubwordSet { n, horizon: w.len(), words })
}

fn index(spec: &FamilySpec, n: usize, horizon: usize) -> Result<OccurrenceIndex> {
    OccurrenceIndex::build(&spec.materialize(horizon), n, spec.alphabet(), DEFAULT_EXPANSION_CAP)
}

/// `p_w(n)` at horizon `L`.
pub fn complexity(spec: &FamilySpec, n: usize, horizon: usize) -> Result<usize> {
    Ok(index(spec, n, horizon)?.len())
}

/// A word with a single occurrence in the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub word: String,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecurrenceStatus {
    AllRepeatAtHorizon,
    SingleOccurrenceFound,
}

/// Whether every length-`n` subword occurs twice in the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceVerdict {
    pub family: String,
    pub n: usize,
    pub horizon: usize,
    pub status: RecurrenceStatus,
    pub witnesses: Vec<Witness>,
}

impl RecurrenceVerdict {
    pub fn all_repeat(&self) -> bool {
        self.status == RecurrenceStatus::AllRepeatAtHorizon
    }
}

pub fn verdict_from_index(spec: &FamilySpec, idx: &OccurrenceIndex) -> RecurrenceVerdict {
    let witnesses: Vec<Witness> = idx
        .single_occurrences()
        .into_iter()
        .map(|(u, position)| Witness { word: u.render(spec.alphabet()), position })
        .collect();
    let status = if witnesses.is_empty() {
        RecurrenceStatus::AllRepeatAtHorizon
    } else {
        RecurrenceStatus::SingleOccurrenceFound
    };
    RecurrenceVerdict { family: spec.name().to_string(), n: idx.n(), horizon: idx.horizon(), status, witnesses }
}

pub fn recurrence_verdict(spec: &FamilySpec, n: usize, horizon: usize) -> Result<RecurrenceVerdict> {
    Ok(verdict_from_index(spec, &index(spec, n, horizon)?))
}

/// `R_w(n)` at horizon `L`, or `None` when the smallest window exceeds half
/// the horizon and so is not supported by the prefix.
pub fn uniform_recurrence_function(spec: &FamilySpec, n: usize, horizon: usize) -> Result<Option<usize>> {
    Ok(bounded_window(&index(spec, n, horizon)?))
}

fn bounded_window(idx: &OccurrenceIndex) -> Option<usize> {
    let m = idx.recurrence_window();
    (m <= idx.horizon() / 2).then_some(m)
}

/// `RSub_w(n)` proxy together with the counts `p`, `r`, `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrentSubwords {
    pub cutoff: usize,
    pub all: SubwordSet,
    pub recurrent: SubwordSet,
}

impl RecurrentSubwords {
    pub fn p(&self) -> usize {
        self.all.len()
    }

    pub fn r(&self) -> usize {
        self.recurrent.len()
    }

    pub fn d(&self) -> usize {
        self.p() - self.r()
    }
}

fn check_cutoff(n: usize, horizon: usize, cutoff: usize) -> Result<()> {
    if n > horizon || cutoff + n >= horizon {
        return Err(Error::Argument(format!(
            "cutoff {cutoff} must be below horizon − n = {}",
            horizon.saturating_sub(n)
        )));
    }
    Ok(())
}

pub fn recurrent_subwords(spec: &FamilySpec, n: usize, horizon: usize, cutoff: Option<usize>) -> Result<RecurrentSubwords> {
    let cutoff = cutoff.unwrap_or(horizon / 2);
    check_cutoff(n, horizon, cutoff)?;
    let idx = index(spec, n, horizon)?;
    Ok(RecurrentSubwords { cutoff, all: idx.subword_set(), recurrent: idx.recurrent(cutoff) })
}

/// Lexicographically smallest `(preperiod, period)` consistent with the
/// window, or `None`.
pub fn fit_ultimately_periodic(w: &PartialWord, max_preperiod: usize, max_period: usize) -> Result<Option<(usize, usize)>> {
    if max_period == 0 || max_preperiod + 2 * max_period > w.len() {
        return Err(Error::Argument(format!(
            "need 1 <= max period and max preperiod + 2·max period <= {}",
            w.len()
        )));
    }
    for pre in 0..=max_preperiod {
        for p in 1..=max_period {
            if periodic_from(w.symbols(), pre, p) {
                return Ok(Some((pre, p)));
            }
        }
    }
    Ok(None)
}

pub fn fit_family(spec: &FamilySpec, horizon: usize, max_preperiod: usize, max_period: usize) -> Result<Option<(usize, usize)>> {
    fit_ultimately_periodic(&spec.materialize(horizon), max_preperiod, max_period)
}

/// One `n` of a [`ComplexityProfile`], reported at the doubled horizon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub p: usize,
    pub r: usize,
    pub d: usize,
    #[serde(rename = "R")]
    pub recurrence: Option<usize>,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub family: String,
    /// Horizon the reported values were computed at.
    pub horizon: usize,
    /// Horizon used for the stability comparison.
    pub base_horizon: usize,
    pub cutoff: usize,
    pub rows: Vec<ProfileRow>,
}

impl ComplexityProfile {
    pub fn row(&self, n: usize) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn stable_rows(&self) -> impl Iterator<Item = &ProfileRow> {
        self.rows.iter().filter(|r| r.stable)
    }

    pub fn p(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.p).collect()
    }

    pub fn r(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.r).collect()
    }

    pub fn d(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.d).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,p,r,d,R,stable\n");
        for row in &self.rows {
            let r = row.recurrence.map(|m| m.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{},{},{}\n", row.n, row.p, row.r, row.d, r, row.stable));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ProfileOptions {
    /// Cutoff at the base horizon; doubled at the reported horizon.
    pub cutoff: Option<usize>,
    /// Permit `n_max > L/4`; such rows are flagged unstable.
    pub allow_unstable: bool,
}

struct RowValues {
    p: usize,
    r: usize,
    recurrence: Option<usize>,
}

fn row_values(w: &PartialWord, alphabet: &Alphabet, n: usize, cutoff: usize) -> Result<RowValues> {
    let idx = OccurrenceIndex::build(w, n, alphabet, DEFAULT_EXPANSION_CAP)?;
    Ok(RowValues { p: idx.len(), r: idx.recurrent(cutoff).len(), recurrence: bounded_window(&idx) })
}

/// Rows `1..=n_max` computed at `L` and `2L`; a row is stable when `p`, `r`
/// and `d` agree at both horizons and `n <= L/4`.
pub fn stabilized_profile(spec: &FamilySpec, n_max: usize, horizon: usize, opts: ProfileOptions) -> Result<ComplexityProfile> {
    use rayon::prelude::*;

    if n_max == 0 {
        return Err(Error::Argument("n-max must be positive".into()));
    }
    let reliable = horizon / 4;
    if n_max > reliable && !opts.allow_unstable {
        return Err(Error::Argument(format!(
            "n-max {n_max} exceeds the reliable range L/4 = {reliable}; pass allow-unstable to force"
        )));
    }
    let cutoff = opts.cutoff.unwrap_or(horizon / 2);
    check_cutoff(n_max, horizon, cutoff)?;
    let short = spec.materialize(horizon);
    let long = spec.materialize(2 * horizon);
    let alphabet = spec.alphabet();
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let a = row_values(&short, alphabet, n, cutoff)?;
            let b = row_values(&long, alphabet, n, 2 * cutoff)?;
            Ok(ProfileRow {
                n,
                p: b.p,
                r: b.r,
                d: b.p - b.r,
                recurrence: b.recurrence,
                stable: n <= reliable && a.p == b.p && a.r == b.r,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexityProfile {
        family: spec.name().to_string(),
        horizon: 2 * horizon,
        base_horizon: horizon,
        cutoff: 2 * cutoff,
        rows,
    })
}

/// Outcome of searching for a shift after which the word is recurrent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum UltimateRecurrence {
    /// Every checked length repeats within the window starting at `shift`.
    Recurrent { shift: usize, required: Vec<usize> },
    /// The shift needed for length `n` keeps growing with `n`.
    Growing { required: Vec<Option<usize>> },
    /// Some length needs a shift beyond `L/4`.
    Exceeded { n: usize },
}

impl UltimateRecurrence {
    pub fn shift(&self) -> Option<usize> {
        match self {
            UltimateRecurrence::Recurrent { shift, .. } => Some(*shift),
            _ => None,
        }
    }
}

/// Searches shifts `s <= L/4` for which every subword of length `1..=n_max`
/// of the window `[s, s+L)` occurs there at least twice.
pub fn ultimate_recurrence(spec: &FamilySpec, n_max: usize, horizon: usize) -> Result<UltimateRecurrence> {
    use rayon::prelude::*;

    let max_shift = horizon / 4;
    let w = spec.materialize(horizon + max_shift);
    let indexes = (1..=n_max)
        .into_par_iter()
        .map(|n| OccurrenceIndex::build(&w, n, spec.alphabet(), DEFAULT_EXPANSION_CAP))
        .collect::<Result<Vec<_>>>()?;
    let required: Vec<Option<usize>> = indexes
        .par_iter()
        .map(|idx| (0..=max_shift).find(|&s| idx.all_repeat_within(s, horizon)))
        .collect();

    if n_max >= 4 {
        let checkpoints = [n_max.div_ceil(2), (3 * n_max).div_ceil(4), n_max];
        let value = |n: usize| required[n - 1].unwrap_or(usize::MAX);
        let increasing = checkpoints.windows(2).all(|c| c[0] < c[1] && value(c[0]) < value(c[1]));
        if increasing {
            return Ok(UltimateRecurrence::Growing { required });
        }
    }
    if let Some(n) = required.iter().position(Option::is_none) {
        return Ok(UltimateRecurrence::Exceeded { n: n + 1 });
    }
    let required: Vec<usize> = required.into_iter().flatten().collect();
    let lowest = required.iter().copied().max().unwrap_or(0);
    let shift = (lowest..=max_shift).find(|&s| indexes.iter().all(|idx| idx.all_repeat_within(s, horizon)));
    Ok(match shift {
        Some(shift) => UltimateRecurrence::Recurrent { shift, required },
        None => UltimateRecurrence::Exceeded { n: n_max },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::preset;

    fn ab() -> Alphabet {
        Alphabet::binary()
    }

    fn pw(s: &str) -> PartialWord {
        PartialWord::parse(s, &ab()).unwrap()
    }

    fn words(set: &SubwordSet) -> Vec<String> {
        set.render(&ab())
    }

    #[test]
    fn subword_set_examples() {
        let s = subword_set(&pw("*aaaaa"), 2, &ab(), 20).unwrap();
        assert_eq!(words(&s), ["aa", "ba"]);
        assert_eq!(subword_set(&pw("***"), 2, &ab(), 20).unwrap().len(), 4);
        let s = subword_set(&pw("baabaaaab"), 3, &ab(), 20).unwrap();
        assert_eq!(words(&s), ["aaa", "aab", "aba", "baa"]);
        assert!(subword_set(&pw("ab"), 3, &ab(), 20).is_err());
        assert!(matches!(subword_set(&pw("****"), 4, &ab(), 3), Err(Error::ExpansionCap { .. })));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(words(&brute_force_subword_set(&pw("aaa"), 1, &ab(), DEFAULT_ORACLE_CAP).unwrap()), ["a"]);
        assert_eq!(words(&brute_force_subword_set(&pw("a*b"), 3, &ab(), DEFAULT_ORACLE_CAP).unwrap()), ["aab", "abb"]);
        let w = pw("*aaaaa");
        assert_eq!(
            brute_force_subword_set(&w, 2, &ab(), DEFAULT_ORACLE_CAP).unwrap(),
            subword_set(&w, 2, &ab(), 20).unwrap()
        );
        assert!(matches!(
            brute_force_subword_set(&pw("aaaaa"), 5, &ab(), 16),
            Err(Error::OracleCap { candidates: 32, cap: 16 })
        ));
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(&preset("trivial-holes").unwrap(), 5, 16).unwrap(), 32);
        assert_eq!(complexity(&preset("hole-then-a").unwrap(), 3, 16).unwrap(), 2);
        assert_eq!(complexity(&preset("ultimately-periodic::ab").unwrap(), 2, 16).unwrap(), 2);
    }

    #[test]
    fn recurrence_verdict_examples() {
        let v = recurrence_verdict(&preset("hole-then-a").unwrap(), 1, 32).unwrap();
        assert_eq!(v.status, RecurrenceStatus::SingleOccurrenceFound);
        assert_eq!(v.witnesses, [Witness { word: "b".into(), position: 0 }]);
        for n in 1..=5 {
            assert!(recurrence_verdict(&preset("trivial-holes").unwrap(), n, 64).unwrap().all_repeat());
        }
        let v = recurrence_verdict(&preset("b-at-squares").unwrap(), 4, 256).unwrap();
        assert!(v.witnesses.iter().any(|w| w.word == "baab" && w.position == 0));
    }

    #[test]
    fn recurrence_function_examples() {
        assert_eq!(uniform_recurrence_function(&preset("trivial-holes").unwrap(), 1, 32).unwrap(), Some(1));
        let a = preset("ultimately-periodic::a").unwrap();
        assert_eq!(uniform_recurrence_function(&a, 2, 32).unwrap(), Some(2));
        assert_eq!(uniform_recurrence_function(&preset("thue-morse").unwrap(), 1, 256).unwrap(), Some(3));
        assert_eq!(uniform_recurrence_function(&preset("hole-then-a").unwrap(), 1, 32).unwrap(), None);
    }

    #[test]
    fn recurrent_subword_examples() {
        let rs = recurrent_subwords(&preset("hole-then-a").unwrap(), 2, 64, Some(32)).unwrap();
        assert_eq!(words(&rs.recurrent), ["aa"]);
        assert_eq!((rs.r(), rs.d()), (1, 1));
        let rs = recurrent_subwords(&preset("b-at-squares").unwrap(), 5, 4096, Some(2048)).unwrap();
        assert_eq!(words(&rs.recurrent), ["aaaaa", "aaaab", "aaaba", "aabaa", "abaaa", "baaaa"]);
        let rs = recurrent_subwords(&preset("trivial-holes").unwrap(), 3, 64, Some(32)).unwrap();
        assert_eq!((rs.r(), rs.d()), (8, 0));
        assert!(recurrent_subwords(&preset("trivial-holes").unwrap(), 3, 64, Some(61)).is_err());
    }

    #[test]
    fn periodic_fit_examples() {
        assert_eq!(fit_family(&preset("ultimately-periodic:ab:ba").unwrap(), 64, 16, 16).unwrap(), Some((2, 2)));
        assert_eq!(fit_family(&preset("ultimately-periodic:ab:ab").unwrap(), 64, 16, 16).unwrap(), Some((0, 2)));
        assert_eq!(fit_family(&preset("hole-then-a").unwrap(), 64, 16, 16).unwrap(), Some((0, 1)));
        assert_eq!(fit_family(&preset("thue-morse").unwrap(), 256, 32, 64).unwrap(), None);
        assert!(fit_family(&preset("thue-morse").unwrap(), 64, 32, 32).is_err());
    }

    #[test]
    fn profile_csv_shape() {
        let prof = stabilized_profile(&preset("hole-then-a").unwrap(), 3, 16, ProfileOptions::default()).unwrap();
        assert_eq!(prof.to_csv(), "n,p,r,d,R,stable\n1,2,1,1,,true\n2,2,1,1,,true\n3,2,1,1,,true\n");
        assert!(stabilized_profile(&preset("hole-then-a").unwrap(), 5, 16, ProfileOptions::default()).is_err());
    }

    #[test]
    fn ultimate_recurrence_examples() {
        assert_eq!(ultimate_recurrence(&preset("hole-then-a").unwrap(), 4, 64).unwrap().shift(), Some(1));
        assert_eq!(ultimate_recurrence(&preset("trivial-holes").unwrap(), 4, 64).unwrap().shift(), Some(0));
        assert!(matches!(
            ultimate_recurrence(&preset("b-at-squares").unwrap(), 16, 4096).unwrap(),
            UltimateRecurrence::Growing { .. }
        ));
    }
}

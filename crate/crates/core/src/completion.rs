//! Filling holes: Sub-preserving greedy completion, enumeration, complexity
//! gaps and most-complex-completion search.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{self, OccurrenceIndex, SubwordSet};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::word::{matches_at, Alphabet, Completions, FullWord, PartialWord, Symbol, DEFAULT_EXPANSION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FillReason {
    /// The hole lies in the segment chosen to realize subword `index`.
    SubwordEmbed { index: usize },
    Default,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fill {
    pub position: usize,
    pub letter: char,
    pub reason: FillReason,
}

/// A subword realized on the half-open segment `[start, end)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Covered {
    pub index: usize,
    pub word: String,
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionResult {
    pub family: String,
    pub horizon: usize,
    pub completed: String,
    #[serde(skip)]
    pub word: FullWord,
    pub fills: Vec<Fill>,
    pub covered: Vec<Covered>,
    /// Subwords that had no occurrence left to embed into.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl CompletionResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("completion serializes")
    }
}

/// `Sub_w(1..=n_max)` of a window in length-then-lexicographic order.
pub fn ordered_subwords(w: &PartialWord, n_max: usize, alphabet: &Alphabet) -> Result<Vec<FullWord>> {
    let mut out = Vec::new();
    for n in 1..=n_max.min(w.len()) {
        out.extend(analysis::subword_set(w, n, alphabet, DEFAULT_EXPANSION_CAP)?.words);
    }
    Ok(out)
}

struct Embedder<'a> {
    alphabet: &'a Alphabet,
    symbols: Vec<Symbol>,
    reasons: BTreeMap<usize, FillReason>,
    covered: Vec<Covered>,
    pos: usize,
}

impl<'a> Embedder<'a> {
    fn new(w: &PartialWord, alphabet: &'a Alphabet) -> Self {
        Embedder { alphabet, symbols: w.symbols().to_vec(), reasons: BTreeMap::new(), covered: Vec::new(), pos: 0 }
    }

    /// Start of an occurrence of `x` made only of letters, ending at or
    /// before the current position.
    fn realized(&self, x: &FullWord) -> Option<usize> {
        let n = x.len();
        (0..(self.pos + 1).saturating_sub(n)).find(|&j| {
            self.symbols[j..j + n].iter().zip(x.letters()).all(|(s, &l)| *s == Symbol::Letter(l))
        })
    }

    /// Records an existing occurrence, or embeds `x` first-fit at or after the
    /// current position.
    fn embed(&mut self, index: usize, x: &FullWord) -> bool {
        if let Some(j) = self.realized(x) {
            self.covered.push(Covered { index, word: x.render(self.alphabet), start: j, end: j + x.len() });
            return true;
        }
        let Some(j) = (self.pos..self.symbols.len()).find(|&j| matches_at(x.letters(), &self.symbols, j)) else {
            return false;
        };
        for (offset, &l) in x.letters().iter().enumerate() {
            let s = &mut self.symbols[j + offset];
            if s.is_hole() {
                *s = Symbol::Letter(l);
                self.reasons.insert(j + offset, FillReason::SubwordEmbed { index });
            }
        }
        self.covered.push(Covered { index, word: x.render(self.alphabet), start: j, end: j + x.len() });
        self.pos = j + x.len();
        true
    }

    fn finish(mut self, spec: &FamilySpec, skipped: Vec<String>) -> CompletionResult {
        for (i, s) in self.symbols.iter_mut().enumerate() {
            if s.is_hole() {
                *s = Symbol::Letter(0);
                self.reasons.insert(i, FillReason::Default);
            }
        }
        let word = PartialWord::new(self.symbols).to_full().expect("every hole filled");
        let fills = self
            .reasons
            .into_iter()
            .map(|(position, reason)| Fill { position, letter: self.alphabet.letter(word.letters()[position]), reason })
            .collect();
        CompletionResult {
            family: spec.name().to_string(),
            horizon: word.len(),
            completed: word.render(self.alphabet),
            word,
            fills,
            covered: self.covered,
            skipped,
        }
    }
}

/// Realizes every subword of length `1..=n_max` of the window on disjoint
/// left-to-right segments, then fills leftover holes with the first letter.
///
/// A subword already spelled out by letters left of the current segment is
/// recorded at that occurrence instead of consuming a new segment.
pub fn greedy_preserving_completion(spec: &FamilySpec, n_max: usize, horizon: usize) -> Result<CompletionResult> {
    let w = spec.materialize(horizon);
    let alphabet = spec.alphabet();
    let subwords = ordered_subwords(&w, n_max, alphabet)?;
    let mut e = Embedder::new(&w, alphabet);
    for (index, x) in subwords.iter().enumerate() {
        if !e.embed(index, x) {
            return Err(Error::InsufficientHorizon(format!(
                "family {}: subword `{}` (#{index}) has no occurrence at or after position {} within L = {horizon}",
                spec.name(),
                x.render(alphabet),
                e.pos
            )));
        }
    }
    Ok(e.finish(spec, Vec::new()))
}

/// Best-effort interleaving of non-recurrent and recurrent subwords, one
/// length at a time; words that cannot be placed are listed as skipped.
pub fn adversarial_completion(spec: &FamilySpec, n_max: usize, horizon: usize, cutoff: usize) -> Result<CompletionResult> {
    let w = spec.materialize(horizon);
    let alphabet = spec.alphabet();
    let mut e = Embedder::new(&w, alphabet);
    let mut skipped = Vec::new();
    let mut index = 0;
    for n in 1..=n_max.min(w.len()) {
        let idx = OccurrenceIndex::build(&w, n, alphabet, DEFAULT_EXPANSION_CAP)?;
        let recurrent = idx.recurrent(cutoff).words;
        let (rec, non): (Vec<&FullWord>, Vec<&FullWord>) =
            idx.words().map(|(u, _)| u).partition(|u| recurrent.contains(*u));
        let mut rec = rec.into_iter();
        for x in non {
            if !e.embed(index, x) {
                skipped.push(x.render(alphabet));
            }
            index += 1;
            if let Some(y) = rec.next() {
                if !e.embed(index, y) {
                    skipped.push(y.render(alphabet));
                }
                index += 1;
            }
        }
        for y in rec {
            if !e.embed(index, y) {
                skipped.push(y.render(alphabet));
            }
            index += 1;
        }
    }
    Ok(e.finish(spec, skipped))
}

/// All completions in lexicographic fill order.
pub fn enumerate_completions(w: &PartialWord, alphabet: &Alphabet, cap: usize) -> Result<Completions> {
    w.completions(alphabet, cap)
}

/// Completions varying only the first `holes` holes; later holes get the
/// first letter.
pub fn tail_defaulted_completions(w: &PartialWord, holes: usize, alphabet: &Alphabet, cap: usize) -> Result<Completions> {
    w.with_holes_after_filled(holes, 0).completions(alphabet, cap)
}

/// `count` completions with holes filled uniformly at random from `seed`.
pub fn sample_completions(w: &PartialWord, alphabet: &Alphabet, count: usize, seed: u64) -> Vec<FullWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = alphabet.size() as u8;
    (0..count)
        .map(|_| FullWord(w.symbols().iter().map(|s| s.letter().unwrap_or_else(|| rng.gen_range(0..k))).collect()))
        .collect()
}

/// `(p(1), …, p(n_max))` of a full word.
pub fn complexity_vector(word: &FullWord, n_max: usize) -> Vec<usize> {
    let letters = word.letters();
    (1..=n_max)
        .map(|n| if n > letters.len() { 0 } else { letters.windows(n).collect::<HashSet<_>>().len() })
        .collect()
}

pub fn full_subword_set(word: &FullWord, n: usize) -> SubwordSet {
    let words = if n == 0 || n > word.len() {
        Default::default()
    } else {
        word.letters().windows(n).map(|s| FullWord(s.to_vec())).collect()
    };
    SubwordSet { n, horizon: word.len(), words }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapSummary {
    GapZero,
    GapBoundedAtHorizon,
    GapGrowing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityGap {
    /// `(n, p_w(n) − p_ŵ(n))`.
    pub gaps: Vec<(usize, usize)>,
    pub summary: GapSummary,
}

/// Classifies a gap sequence indexed from `n = 1`: zero everywhere, or
/// strictly increasing over the top quartile, or neither.
pub fn classify_gaps(gaps: &[usize]) -> GapSummary {
    let n_max = gaps.len();
    if gaps.iter().all(|&g| g == 0) {
        return GapSummary::GapZero;
    }
    let from = n_max.saturating_sub((n_max / 4).max(1)).max(1);
    if n_max >= 2 && gaps[from - 1..].windows(2).all(|g| g[0] < g[1]) {
        GapSummary::GapGrowing
    } else {
        GapSummary::GapBoundedAtHorizon
    }
}

/// `p_w(n) − p_ŵ(n)` for `n = 1..=n_max` at horizon `L`.
pub fn complexity_gap(spec: &FamilySpec, completion: &FullWord, n_max: usize, horizon: usize) -> Result<ComplexityGap> {
    let w = spec.materialize(horizon);
    if !w.compatible(&PartialWord::from(completion.clone())) {
        return Err(Error::Argument(format!(
            "completion is not compatible with the length-{horizon} prefix of {}",
            spec.name()
        )));
    }
    let completed = complexity_vector(completion, n_max);
    let mut gaps = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let p = OccurrenceIndex::build(&w, n, spec.alphabet(), DEFAULT_EXPANSION_CAP)?.len();
        gaps.push((n, p - completed[n - 1]));
    }
    let summary = classify_gaps(&gaps.iter().map(|g| g.1).collect::<Vec<_>>());
    Ok(ComplexityGap { gaps, summary })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub completion: String,
    pub p: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub completion: String,
    pub contains_recurrent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub family: String,
    pub horizon: usize,
    pub n_max: usize,
    pub cutoff: usize,
    pub candidates: Vec<Candidate>,
    pub dominant: Option<String>,
    pub pareto_front: Vec<String>,
    /// Whether each dominant or Pareto member contains the recurrent
    /// subwords of the window for every `n <= n_max`.
    pub containment: Vec<Containment>,
}

impl DominanceReport {
    pub fn all_contain_recurrent(&self) -> bool {
        self.containment.iter().all(|c| c.contains_recurrent)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dominance report serializes")
    }
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Evaluates the complexity vector of every completion of the window and
/// reports a pointwise-dominant completion or the Pareto front.
pub fn most_complex_search(spec: &FamilySpec, n_max: usize, horizon: usize, hole_budget: usize) -> Result<DominanceReport> {
    use rayon::prelude::*;

    let w = spec.materialize(horizon);
    let budget = hole_budget.min(DEFAULT_EXPANSION_CAP);
    let words: Vec<FullWord> = w.completions(spec.alphabet(), budget)?.collect();
    let vectors: Vec<Vec<usize>> = words.par_iter().map(|u| complexity_vector(u, n_max)).collect();

    let dominant = (0..words.len()).find(|&i| vectors.iter().all(|v| dominates(&vectors[i], v)));
    let mut front: Vec<usize> = Vec::new();
    for i in 0..words.len() {
        let beaten = vectors.iter().any(|v| v != &vectors[i] && dominates(v, &vectors[i]));
        if !beaten && !front.iter().any(|&j| vectors[j] == vectors[i]) {
            front.push(i);
        }
    }

    let cutoff = horizon / 2;
    let recurrent = (1..=n_max)
        .map(|n| analysis::recurrent_subwords(spec, n, horizon, Some(cutoff)).map(|rs| rs.recurrent))
        .collect::<Result<Vec<_>>>()?;
    let members: Vec<usize> = match dominant {
        Some(d) => vec![d],
        None => front.clone(),
    };
    let alphabet = spec.alphabet();
    let containment = members
        .iter()
        .map(|&i| Containment {
            completion: words[i].render(alphabet),
            contains_recurrent: recurrent.iter().all(|rs| rs.is_subset(&full_subword_set(&words[i], rs.n))),
        })
        .collect();

    Ok(DominanceReport {
        family: spec.name().to_string(),
        horizon,
        n_max,
        cutoff,
        candidates: words
            .iter()
            .zip(&vectors)
            .map(|(u, v)| Candidate { completion: u.render(alphabet), p: v.clone() })
            .collect(),
        dominant: dominant.map(|i| words[i].render(alphabet)),
        pareto_front: front.iter().map(|&i| words[i].render(alphabet)).collect(),
        containment,
    })
}

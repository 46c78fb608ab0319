//! Theorem checks as executable predicates over families and profiles.
//!
//! Every predicate returns a [`PredicateReport`] with a verdict of PASS, FAIL
//! or INCONCLUSIVE. FAIL always carries a witness; INCONCLUSIVE always carries
//! a note naming the unmet hypothesis or the horizon shortfall.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{self, ComplexityProfile, OccurrenceIndex, ProfileOptions, UltimateRecurrence};
use crate::completion::{self, GapSummary};
use crate::error::{Error, Result};
use crate::family::{FamilySpec, HoleSupply};
use crate::word::{FullWord, PartialWord, DEFAULT_EXPANSION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Condition {
    pub id: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredicateReport {
    pub predicate: String,
    pub family: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub conditions: Vec<Condition>,
    pub witnesses: Vec<Value>,
    pub notes: Vec<String>,
}

impl PredicateReport {
    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn parameter(&self, key: &str) -> Option<&Value> {
        self.parameters.get(key)
    }
}

struct Report(PredicateReport);

impl Report {
    fn new(predicate: Predicate, family: &str) -> Self {
        Report(PredicateReport {
            predicate: predicate.id().to_string(),
            family: family.to_string(),
            parameters: BTreeMap::new(),
            verdict: Verdict::Inconclusive,
            conditions: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
        })
    }

    fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.0.parameters.insert(key.to_string(), serde_json::to_value(value).expect("parameter serializes"));
        self
    }

    fn push(&mut self, id: &str, verdict: Verdict, detail: impl Into<String>) {
        self.0.conditions.push(Condition { id: id.to_string(), verdict, detail: detail.into() });
    }

    fn pass(&mut self, id: &str, detail: impl Into<String>) {
        self.push(id, Verdict::Pass, detail);
    }

    fn fail(&mut self, id: &str, detail: impl Into<String>, witness: Value) {
        self.push(id, Verdict::Fail, detail);
        self.0.witnesses.push(witness);
    }

    fn inconclusive(&mut self, id: &str, detail: impl Into<String>) {
        let detail = detail.into();
        self.0.notes.push(format!("{id}: {detail}"));
        self.push(id, Verdict::Inconclusive, detail);
    }

    fn note(&mut self, text: impl Into<String>) {
        self.0.notes.push(text.into());
    }

    fn witness(&mut self, witness: Value) {
        self.0.witnesses.push(witness);
    }

    fn finish(mut self) -> PredicateReport {
        let verdicts: Vec<Verdict> = self.0.conditions.iter().map(|c| c.verdict).collect();
        self.0.verdict = if verdicts.contains(&Verdict::Fail) {
            Verdict::Fail
        } else if verdicts.contains(&Verdict::Pass) {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        };
        if self.0.verdict == Verdict::Inconclusive && self.0.notes.is_empty() {
            self.0.notes.push("no condition could be evaluated at this horizon".into());
        }
        self.0
    }
}

/// The predicates in their fixed report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Ferenczi,
    RecurrenceEquivalences,
    NotUltimatelyPeriodic,
    RecurrenceFunctionBounds,
    MaxComplexityExclusion,
    RecurrentCompletions,
    DefectDichotomy,
    ThetaEquivalence,
    CompletionGap,
    UltimateRecurrenceBound,
    UltimatelyRecurrentFromCompletions,
}

impl Predicate {
    pub const ALL: [Predicate; 11] = [
        Predicate::Ferenczi,
        Predicate::RecurrenceEquivalences,
        Predicate::NotUltimatelyPeriodic,
        Predicate::RecurrenceFunctionBounds,
        Predicate::MaxComplexityExclusion,
        Predicate::RecurrentCompletions,
        Predicate::DefectDichotomy,
        Predicate::ThetaEquivalence,
        Predicate::CompletionGap,
        Predicate::UltimateRecurrenceBound,
        Predicate::UltimatelyRecurrentFromCompletions,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Predicate::Ferenczi => "ferenczi",
            Predicate::RecurrenceEquivalences => "recurrence-equivalences",
            Predicate::NotUltimatelyPeriodic => "not-ultimately-periodic",
            Predicate::RecurrenceFunctionBounds => "recurrence-function-bounds",
            Predicate::MaxComplexityExclusion => "max-complexity-exclusion",
            Predicate::RecurrentCompletions => "recurrent-completions",
            Predicate::DefectDichotomy => "defect-dichotomy",
            Predicate::ThetaEquivalence => "theta-equivalence",
            Predicate::CompletionGap => "completion-gap",
            Predicate::UltimateRecurrenceBound => "ultimate-recurrence-bound",
            Predicate::UltimatelyRecurrentFromCompletions => "ultimately-recurrent-from-completions",
        }
    }

    pub fn parse(id: &str) -> Result<Predicate> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.id() == id)
            .ok_or_else(|| Error::Argument(format!("unknown predicate `{id}`")))
    }
}

/// Horizons, ranges and search bounds shared by the predicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyParams {
    pub horizon: usize,
    pub n_max: usize,
    pub cutoff: Option<usize>,
    pub seed: u64,
    /// Random completions drawn when exhaustive enumeration is too large.
    pub sample_count: usize,
    /// Upper end of every existential constant search.
    pub max_constant: usize,
    pub max_preperiod: Option<usize>,
    pub max_period: Option<usize>,
    /// Leading holes enumerated in tail-defaulted completions.
    pub completion_holes: usize,
    /// Largest hole count for which all completions are enumerated.
    pub exhaustive_holes: usize,
    /// Subword lengths used to decide ultimate recurrence.
    pub ur_n_max: usize,
    /// Subword lengths used by the adversarial completion.
    pub adversarial_n_max: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            horizon: 256,
            n_max: 6,
            cutoff: None,
            seed: 0,
            sample_count: 16,
            max_constant: 64,
            max_preperiod: None,
            max_period: None,
            completion_holes: 6,
            exhaustive_holes: 10,
            ur_n_max: 16,
            adversarial_n_max: 16,
        }
    }
}

impl VerifyParams {
    pub fn cutoff(&self) -> usize {
        self.cutoff.unwrap_or(self.horizon / 2)
    }

    fn validate(&self) -> Result<()> {
        if self.n_max == 0 || self.n_max > self.horizon / 4 {
            return Err(Error::Argument(format!(
                "n-max {} must lie in 1..={} (L/4)",
                self.n_max,
                self.horizon / 4
            )));
        }
        Ok(())
    }
}

/// Lazily computed data shared by the predicates of one family.
pub struct Context<'a> {
    spec: &'a FamilySpec,
    params: VerifyParams,
    window: PartialWord,
    profile: OnceLock<Result<ComplexityProfile>>,
    indexes: OnceLock<Result<Vec<OccurrenceIndex>>>,
    ultimate: OnceLock<Result<UltimateRecurrence>>,
}

impl<'a> Context<'a> {
    pub fn new(spec: &'a FamilySpec, params: VerifyParams) -> Result<Self> {
        params.validate()?;
        Ok(Context {
            spec,
            window: spec.materialize(params.horizon),
            params,
            profile: OnceLock::new(),
            indexes: OnceLock::new(),
            ultimate: OnceLock::new(),
        })
    }

    pub fn params(&self) -> &VerifyParams {
        &self.params
    }

    fn k(&self) -> usize {
        self.spec.alphabet().size()
    }

    pub fn profile(&self) -> Result<&ComplexityProfile> {
        self.profile
            .get_or_init(|| {
                let opts = ProfileOptions { cutoff: self.params.cutoff, allow_unstable: false };
                analysis::stabilized_profile(self.spec, self.params.n_max, self.params.horizon, opts)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Occurrence indexes of the length-`L` window for `n = 1..=n_max`.
    fn indexes(&self) -> Result<&[OccurrenceIndex]> {
        self.indexes
            .get_or_init(|| {
                (1..=self.params.n_max)
                    .map(|n| OccurrenceIndex::build(&self.window, n, self.spec.alphabet(), DEFAULT_EXPANSION_CAP))
                    .collect()
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    fn ultimate(&self) -> Result<&UltimateRecurrence> {
        self.ultimate
            .get_or_init(|| analysis::ultimate_recurrence(self.spec, self.params.ur_n_max, self.params.horizon))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn base_report(&self, predicate: Predicate) -> Report {
        let mut r = Report::new(predicate, self.spec.name());
        r.param("horizon", self.params.horizon).param("n_max", self.params.n_max);
        r
    }

    /// First single-occurrence witness over `1..=n`, as `(n, word, position)`.
    fn first_single(&self, upto: usize) -> Result<Option<(usize, FullWord, usize)>> {
        for idx in &self.indexes()?[..upto.min(self.params.n_max)] {
            if let Some((u, pos)) = idx.single_occurrences().into_iter().next() {
                return Ok(Some((idx.n(), u, pos)));
            }
        }
        Ok(None)
    }

    /// Recurrence at horizon for lengths beyond `n_max`, built on demand.
    fn all_repeat_upto(&self, upto: usize) -> Result<Option<(usize, String, usize)>> {
        for n in 1..=upto {
            let owned;
            let idx = if n <= self.params.n_max {
                &self.indexes()?[n - 1]
            } else {
                owned = OccurrenceIndex::build(&self.window, n, self.spec.alphabet(), DEFAULT_EXPANSION_CAP)?;
                &owned
            };
            if let Some((u, pos)) = idx.single_occurrences().into_iter().next() {
                return Ok(Some((n, u.render(self.spec.alphabet()), pos)));
            }
        }
        Ok(None)
    }

    fn gaps_increasing_from(&self) -> Option<usize> {
        self.spec.increasing_gaps_from(self.params.horizon, 3)
    }

    /// Completions of the window used by the completion-based predicates:
    /// every completion when few enough holes, else tail-defaulted ones over
    /// the leading holes plus seeded random samples.
    fn completions(&self) -> Result<(Vec<FullWord>, bool)> {
        let alphabet = self.spec.alphabet();
        let holes = self.window.hole_count();
        if holes <= self.params.exhaustive_holes {
            return Ok((self.window.completions(alphabet, DEFAULT_EXPANSION_CAP)?.collect(), true));
        }
        let lead = self.params.completion_holes.min(holes);
        let mut out: Vec<FullWord> =
            completion::tail_defaulted_completions(&self.window, lead, alphabet, DEFAULT_EXPANSION_CAP)?.collect();
        out.extend(completion::sample_completions(&self.window, alphabet, self.params.sample_count, self.params.seed));
        Ok((out, false))
    }

    fn render(&self, u: &FullWord) -> String {
        u.render(self.spec.alphabet())
    }
}

/// Top half of a sequence as three checkpoints: first, middle and last.
fn checkpoints(len: usize) -> Option<[usize; 3]> {
    let start = len / 2;
    (len - start >= 3).then(|| [start, start + (len - 1 - start) / 2, len - 1])
}

fn increasing_at_checkpoints(values: &[usize]) -> bool {
    checkpoints(values.len()).is_some_and(|[a, b, c]| values[a] < values[b] && values[b] < values[c])
}

fn constant_top_half(values: &[usize]) -> bool {
    let top = &values[values.len() / 2..];
    top.len() >= 2 && top.windows(2).all(|w| w[0] == w[1])
}

fn pow_saturating(k: usize, n: usize) -> usize {
    u32::try_from(n).ok().and_then(|n| k.checked_pow(n)).unwrap_or(usize::MAX)
}

/// Necessary conditions on a complexity function, checked on the stable
/// rows of a profile.
pub fn check_ferenczi(profile: &ComplexityProfile, k: usize) -> PredicateReport {
    let mut r = Report::new(Predicate::Ferenczi, &profile.family);
    r.param("horizon", profile.horizon).param("n_max", profile.rows.len());
    let stable: BTreeMap<usize, usize> = profile.stable_rows().map(|row| (row.n, row.p)).collect();
    r.param("stable_rows", stable.len());
    if stable.len() < 2 {
        r.inconclusive("non-decreasing", "fewer than two stable rows");
        return r.finish();
    }
    let p = |n: usize| stable.get(&n).copied();

    match stable.iter().find(|(&n, &pn)| p(n + 1).is_some_and(|next| next < pn)) {
        Some((&n, &pn)) => r.fail(
            "non-decreasing",
            format!("p({}) = {} < p({n}) = {pn}", n + 1, p(n + 1).unwrap()),
            json!({"condition": "non-decreasing", "pair": [n, n + 1], "p": [pn, p(n + 1)]}),
        ),
        None => r.pass("non-decreasing", "p(n) <= p(n+1) on consecutive stable rows"),
    }

    let mut sub_witness = None;
    let mut tight = true;
    'outer: for (&m, &pm) in &stable {
        for (&n, &pn) in stable.range(m..) {
            if let Some(pmn) = p(m + n) {
                if pmn > pm.saturating_mul(pn) {
                    sub_witness = Some((m, n, pmn, pm, pn));
                    break 'outer;
                }
                tight &= pmn == pm * pn;
            }
        }
    }
    match sub_witness {
        Some((m, n, pmn, pm, pn)) => r.fail(
            "submultiplicative",
            format!("p({}) = {pmn} > p({m})·p({n}) = {}", m + n, pm * pn),
            json!({"condition": "submultiplicative", "m": m, "n": n, "p": [pm, pn, pmn]}),
        ),
        None => r.pass(
            "submultiplicative",
            if tight { "p(m+n) = p(m)p(n) throughout" } else { "p(m+n) <= p(m)p(n)" },
        ),
    }

    let trigger = stable.iter().find(|(&n, &pn)| pn <= n || p(n + 1) == Some(pn)).map(|(&n, &pn)| (n, pn));
    match trigger {
        None => r.pass("bounded-after-plateau", "no plateau and p(n) > n on stable rows"),
        Some((n0, p0)) => match stable.range(n0..).find(|(_, &pm)| pm != p0) {
            Some((&m, &pm)) => r.fail(
                "bounded-after-plateau",
                format!("p is {p0} at n = {n0} but p({m}) = {pm}"),
                json!({"condition": "bounded-after-plateau", "n": n0, "m": m, "p": [p0, pm]}),
            ),
            None => r.pass("bounded-after-plateau", format!("p constant at {p0} from n = {n0}")),
        },
    }

    let over = stable.iter().find(|(&n, &pn)| pn > pow_saturating(k, n));
    let first_below = stable.iter().find(|(&n, &pn)| pn < pow_saturating(k, n)).map(|(&n, _)| n);
    let later_max = first_below.and_then(|n0| stable.range(n0..).find(|(&n, &pn)| pn == pow_saturating(k, n)));
    match (over, later_max) {
        (Some((&n, &pn)), _) => r.fail(
            "alphabet-bound",
            format!("p({n}) = {pn} > k^n"),
            json!({"condition": "alphabet-bound", "n": n, "p": pn}),
        ),
        (None, Some((&n, &pn))) => r.fail(
            "alphabet-bound",
            format!("p({n}) = {pn} = k^n after p fell below k^n at n = {}", first_below.unwrap()),
            json!({"condition": "alphabet-bound", "n0": first_below, "n": n, "p": pn}),
        ),
        (None, None) => {
            if let Some(n0) = first_below {
                r.param("n0", n0);
            }
            r.pass("alphabet-bound", "p(n) <= k^n, strict from the first n with p(n) < k^n")
        }
    }
    r.finish()
}

fn ferenczi(ctx: &Context) -> Result<PredicateReport> {
    Ok(check_ferenczi(ctx.profile()?, ctx.k()))
}

fn recurrence_equivalences(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::RecurrenceEquivalences);
    let l = ctx.params.horizon;
    let single = ctx.first_single(ctx.params.n_max)?;
    let all_twice = single.is_none();
    if let Some((n, u, pos)) = &single {
        r.witness(json!({"condition": "all-subwords-twice", "n": n, "word": ctx.render(u), "position": pos}));
    }

    // prefixes long enough to contain the first witness
    let m = match &single {
        Some((n, _, pos)) => (pos + n).max(ctx.params.n_max),
        None => ctx.params.n_max,
    };
    r.param("prefix_length", m);
    let prefixes_twice = if m > l / 2 {
        None
    } else {
        let prefix = ctx.window.truncated(m);
        if prefix.hole_count() > DEFAULT_EXPANSION_CAP {
            None
        } else {
            let idx = OccurrenceIndex::build(&ctx.window, m, ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP)?;
            let once = prefix
                .completions(ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP)?
                .find(|u| idx.positions(u).map_or(0, <[usize]>::len) < 2);
            if let Some(u) = &once {
                r.witness(json!({"condition": "prefixes-twice", "prefix": ctx.render(u)}));
            }
            Some(once.is_none())
        }
    };

    let profile = ctx.profile()?;
    let recurrent = profile.stable_rows().all(|row| row.r == row.p);

    match prefixes_twice {
        None => r.inconclusive(
            "prefixes-agree",
            format!("prefix completions of length {m} cannot be checked within L = {l}"),
        ),
        Some(pt) if pt == all_twice => r.pass(
            "prefixes-agree",
            format!("prefix completions and all subwords both {}", if pt { "repeat" } else { "have a single occurrence" }),
        ),
        Some(pt) => r.fail(
            "prefixes-agree",
            format!("prefix completions repeat: {pt}; all subwords repeat: {all_twice}"),
            json!({"condition": "prefixes-agree", "prefixes_twice": pt, "all_twice": all_twice}),
        ),
    }
    if recurrent == all_twice {
        r.pass("recurrent-agrees", format!("recurrent proxy r = p is {recurrent}"));
    } else {
        r.inconclusive(
            "recurrent-agrees",
            format!("cutoff proxy r = p is {recurrent} while all-repeat is {all_twice}; the proxies use different windows"),
        );
    }
    r.param("all_subwords_twice", all_twice);
    r.param("recurrent_proxy", recurrent);
    Ok(r.finish())
}

fn not_ultimately_periodic(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::NotUltimatelyPeriodic);
    let l = ctx.params.horizon;
    let supply = ctx.spec.hole_supply();
    r.param("hole_supply", supply);
    if ctx.window.hole_count() == 0 {
        r.inconclusive("hypothesis", "the word has no hole within the horizon");
        return Ok(r.finish());
    }
    let gaps_from = ctx.gaps_increasing_from();
    let hypothesis = match supply {
        HoleSupply::Finite => true,
        HoleSupply::Infinite => gaps_from.is_some(),
        HoleSupply::None => false,
    };
    if !hypothesis {
        r.inconclusive(
            "hypothesis",
            "infinitely many holes but the gaps are not eventually increasing within the horizon (a word such as the all-hole word is recurrent and periodic)",
        );
        return Ok(r.finish());
    }
    if let Some(n) = gaps_from {
        r.param("gaps_increasing_from", n);
    }
    // screen lengths spanning two holes
    let second = ctx.spec.hole_function(2, l).unwrap_or(0);
    let screen = ctx.params.n_max.max(second).min(l / 4);
    r.param("recurrence_screen", screen);
    if let Some((n, word, position)) = ctx.all_repeat_upto(screen)? {
        r.inconclusive(
            "recurrent",
            format!("`{word}` (n = {n}) occurs only at {position} within L = {l}; recurrence not established"),
        );
        return Ok(r.finish());
    }
    r.pass("recurrent", format!("every subword of length <= {screen} repeats within L = {l}"));
    let max_pre = ctx.params.max_preperiod.unwrap_or(l / 4);
    let max_period = ctx.params.max_period.unwrap_or(l / 4);
    r.param("max_preperiod", max_pre).param("max_period", max_period);
    match analysis::fit_ultimately_periodic(&ctx.window, max_pre, max_period)? {
        None => r.pass("no-periodic-fit", "no (preperiod, period) within bounds fits the prefix"),
        Some((pre, p)) => r.fail(
            "no-periodic-fit",
            format!("prefix is consistent with preperiod {pre} and period {p}"),
            json!({"condition": "no-periodic-fit", "preperiod": pre, "period": p}),
        ),
    }
    Ok(r.finish())
}

fn recurrence_function_bounds(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::RecurrenceFunctionBounds);
    let profile = ctx.profile()?;
    let rows: Vec<_> = profile.stable_rows().collect();
    let values: Vec<(usize, Option<usize>)> = rows.iter().map(|row| (row.n, row.recurrence)).collect();
    r.param("R", &values);
    if let Some(&(n, _)) = values.iter().find(|(_, m)| m.is_none()) {
        r.inconclusive(
            "uniformly-recurrent",
            format!("R({n}) exceeds half of L = {}; uniform recurrence not established", profile.horizon),
        );
        return Ok(r.finish());
    }
    let rec = |i: usize| values[i].1.unwrap();

    match (1..values.len()).find(|&i| values[i].0 == values[i - 1].0 + 1 && rec(i) <= rec(i - 1)) {
        Some(i) => r.fail(
            "strictly-increasing",
            format!("R({}) = {} <= R({}) = {}", values[i].0, rec(i), values[i - 1].0, rec(i - 1)),
            json!({"condition": "strictly-increasing", "pair": [values[i - 1].0, values[i].0], "R": [rec(i - 1), rec(i)]}),
        ),
        None => r.pass("strictly-increasing", "R(n+1) > R(n)"),
    }

    let mut checked = 0;
    let mut violation = None;
    for (i, row) in rows.iter().enumerate() {
        let full_factor = ctx.spec.materialize(profile.horizon).symbols().windows(row.n).any(|f| f.iter().all(|s| !s.is_hole()));
        if !full_factor {
            continue;
        }
        checked += 1;
        if rec(i) + 1 < row.p + row.n {
            violation = Some((row.n, rec(i), row.p));
            break;
        }
    }
    match (violation, checked) {
        (Some((n, m, p)), _) => r.fail(
            "complexity-bound",
            format!("R({n}) = {m} < p({n}) + {n} − 1 = {}", p + n - 1),
            json!({"condition": "complexity-bound", "n": n, "R": m, "p": p}),
        ),
        (None, 0) => r.inconclusive("complexity-bound", "no full factor of any tested length in the prefix"),
        (None, c) => r.pass("complexity-bound", format!("R(n) >= p(n) + n − 1 on the {c} lengths with a full factor")),
    }

    let hypothesis = ctx.spec.hole_supply() == HoleSupply::Finite || ctx.gaps_increasing_from().is_some();
    if !hypothesis {
        r.inconclusive("doubling-bound", "needs a positive finite number of holes or eventually increasing gaps");
    } else {
        match values.iter().enumerate().find(|(i, (n, _))| rec(*i) < 2 * n) {
            Some((i, (n, _))) => r.fail(
                "doubling-bound",
                format!("R({n}) = {} < 2n", rec(i)),
                json!({"condition": "doubling-bound", "n": n, "R": rec(i)}),
            ),
            None => r.pass("doubling-bound", "R(n) >= 2n"),
        }
    }
    Ok(r.finish())
}

fn max_complexity_exclusion(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::MaxComplexityExclusion);
    let profile = ctx.profile()?;
    let rows: Vec<_> = profile.stable_rows().collect();
    if let Some(row) = rows.iter().find(|row| row.recurrence.is_none()) {
        r.inconclusive("uniformly-recurrent", format!("R({}) not supported by the horizon", row.n));
        return Ok(r.finish());
    }
    let supply = ctx.spec.hole_supply();
    if supply == HoleSupply::Infinite {
        let gaps = ctx.spec.gaps(ctx.params.horizon);
        let diffs: Vec<usize> = gaps.windows(2).map(|g| g[1].saturating_sub(g[0])).collect();
        let spreading = gaps.windows(2).all(|g| g[0] <= g[1]) && increasing_at_checkpoints(&diffs);
        if !spreading {
            r.inconclusive(
                "hypothesis",
                "infinitely many holes without gap differences tending to infinity; maximal complexity is not excluded",
            );
            return Ok(r.finish());
        }
    }
    let k = ctx.k();
    match rows.iter().find(|row| row.p < pow_saturating(k, row.n)) {
        Some(row) => {
            r.param("n0", row.n);
            match rows.iter().find(|later| later.n > row.n && later.p >= pow_saturating(k, later.n)) {
                Some(later) => r.fail(
                    "below-maximal",
                    format!("p({}) = k^n after p({}) < k^n", later.n, row.n),
                    json!({"condition": "below-maximal", "n0": row.n, "n": later.n, "p": later.p}),
                ),
                None => r.pass("below-maximal", format!("p(n) < k^n for every stable n >= {}", row.n)),
            }
        }
        None => {
            let r1 = rows.first().and_then(|row| (row.n == 1).then_some(row.recurrence).flatten());
            let bound_row = r1.and_then(|t| rows.iter().find(|row| row.n == t));
            match (supply, bound_row) {
                (HoleSupply::None, Some(row)) => r.fail(
                    "below-maximal",
                    format!("p({}) = k^n although R(1) = {} forces a missing word", row.n, row.n),
                    json!({"condition": "below-maximal", "n": row.n, "p": row.p}),
                ),
                _ => r.inconclusive("below-maximal", "p(n) = k^n on every stable row; N may lie beyond the range"),
            }
        }
    }
    Ok(r.finish())
}

fn recurrent_completions(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::RecurrentCompletions);
    let hypothesis = match ctx.spec.hole_supply() {
        HoleSupply::None | HoleSupply::Finite => true,
        HoleSupply::Infinite => ctx.gaps_increasing_from().is_some(),
    };
    if !hypothesis {
        r.inconclusive("hypothesis", "needs finitely many holes or an eventually increasing gap function");
        return Ok(r.finish());
    }
    let w_single = ctx.first_single(ctx.params.n_max)?;
    let w_rec = w_single.is_none();
    let (completions, exhaustive) = ctx.completions()?;
    r.param("completions", completions.len()).param("exhaustive", exhaustive).param("seed", ctx.params.seed);

    let alphabet = ctx.spec.alphabet();
    let mut non_recurrent = None;
    for u in &completions {
        let cw = PartialWord::from(u.clone());
        for n in 1..=ctx.params.n_max {
            let idx = OccurrenceIndex::build(&cw, n, alphabet, DEFAULT_EXPANSION_CAP)?;
            if let Some((v, pos)) = idx.single_occurrences().into_iter().next() {
                non_recurrent = Some((ctx.render(u), n, ctx.render(&v), pos));
                break;
            }
        }
        if non_recurrent.is_some() {
            break;
        }
    }
    r.param("word_recurrent", w_rec);
    match (w_rec, &non_recurrent) {
        (true, None) => r.pass("equivalence", "the word and every tested completion repeat all subwords"),
        (true, Some((c, n, v, pos))) => r.inconclusive(
            "equivalence",
            format!("word repeats at L but completion `{c:.24}…` has `{v}` (n = {n}) only at {pos}; recurrence of the completion needs a longer horizon"),
        ),
        (false, Some((_, n, v, pos))) => {
            r.witness(json!({"completion_witness": v, "n": n, "position": pos}));
            r.pass("equivalence", "word and some completion both have a single-occurrence subword")
        }
        (false, None) => {
            let (n, v, pos) = w_single.as_ref().map(|(n, v, p)| (*n, ctx.render(v), *p)).unwrap();
            if exhaustive {
                r.fail(
                    "equivalence",
                    format!("`{v}` (n = {n}) occurs once in the word but every completion repeats all subwords"),
                    json!({"condition": "equivalence", "n": n, "word": v, "position": pos}),
                )
            } else {
                r.inconclusive("equivalence", "word has a single-occurrence subword but no sampled completion does")
            }
        }
    }
    Ok(r.finish())
}

fn defect_dichotomy(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::DefectDichotomy);
    let profile = ctx.profile()?;
    let d: Vec<usize> = profile.stable_rows().map(|row| row.d).collect();
    r.param("d", &d);
    if let Some(row) = profile.stable_rows().find(|row| row.r > row.p) {
        r.fail("defect-nonnegative", format!("r({}) > p", row.n), json!({"n": row.n, "p": row.p, "r": row.r}));
    }
    let growing = increasing_at_checkpoints(&d);
    let constant = constant_top_half(&d);
    match ctx.spec.hole_supply() {
        HoleSupply::None | HoleSupply::Finite => {
            r.param("branch", "finite");
            let ur = ctx.ultimate()?;
            r.param("ultimate_recurrence", ur);
            match (ur, constant, growing) {
                (UltimateRecurrence::Recurrent { shift, .. }, true, _) => {
                    // non-recurrent words start before the shift
                    let bound: usize = (0..*shift)
                        .map(|i| pow_saturating(ctx.k(), ctx.window.symbols()[i..].iter().filter(|s| s.is_hole()).count()))
                        .fold(0usize, usize::saturating_add);
                    r.param("defect_bound", bound);
                    if d.iter().all(|&x| x <= bound) {
                        r.pass("bounded-iff-ultimately-recurrent", format!("shift {shift} recurrent and d bounded by {bound}"));
                    } else {
                        r.inconclusive(
                            "bounded-iff-ultimately-recurrent",
                            format!("d exceeds the shift bound {bound}; the cutoff proxy and the window shift disagree"),
                        );
                    }
                }
                (UltimateRecurrence::Growing { .. }, _, true) => {
                    r.pass("bounded-iff-ultimately-recurrent", "required shift and d both grow")
                }
                (UltimateRecurrence::Growing { .. }, true, false) if d.last().is_some_and(|&x| x > 0) => {
                    r.inconclusive("bounded-iff-ultimately-recurrent", "required shift grows while d plateaus within the range")
                }
                _ => r.inconclusive("bounded-iff-ultimately-recurrent", "neither a bounded nor a growing defect is established"),
            }
        }
        HoleSupply::Infinite => {
            r.param("branch", "infinite");
            let cutoff = ctx.params.cutoff();
            let mut violation = None;
            for (at, idx) in ctx.indexes()?.iter().enumerate() {
                let recurrent = idx.recurrent(cutoff);
                let Some((_, positions)) = idx.words().find(|(v, _)| !recurrent.contains(v)) else {
                    continue;
                };
                let d_l: Vec<usize> = ctx.indexes()?.iter().map(|x| x.len() - x.recurrent(cutoff).len()).collect();
                r.param("d_at_L", &d_l);
                violation = forced_extensions(&ctx.window, positions[0], at + 1, ctx.params.n_max)
                    .into_iter()
                    .find(|&(len, h)| d_l[len - 1] < pow_saturating(ctx.k(), h))
                    .map(|(len, h)| json!({"condition": "zero-or-unbounded", "n": at + 1, "position": positions[0], "length": len, "forced_holes": h, "d": d_l}));
                break;
            }
            if let Some(w) = violation {
                r.fail("zero-or-unbounded", "d is smaller than the extensions forced by a non-recurrent word", w);
            } else if d.iter().all(|&x| x == 0) {
                r.pass("zero-or-unbounded", "d ≡ 0");
            } else if growing {
                r.pass("zero-or-unbounded", "d strictly increases across the top-half checkpoints");
            } else {
                r.inconclusive(
                    "zero-or-unbounded",
                    "d is positive and plateaus within the range; the forced growth needs longer subwords",
                );
            }
        }
    }
    Ok(r.finish())
}

fn theta_equivalence(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::ThetaEquivalence);
    let ur = ctx.ultimate()?;
    r.param("ultimate_recurrence", ur).param("max_constant", ctx.params.max_constant);
    if ur.shift().is_none() {
        r.inconclusive("hypothesis", "not ultimately recurrent at this horizon");
        return Ok(r.finish());
    }
    let rows: Vec<_> = ctx.profile()?.stable_rows().cloned().collect();
    match (1..=ctx.params.max_constant).find(|&c| rows.iter().all(|row| row.r <= row.p && row.p <= c * row.r)) {
        Some(c) => {
            r.param("C", c);
            r.pass("theta", format!("r(n) <= p(n) <= {c}·r(n)"));
        }
        None => {
            let worst = rows.iter().max_by_key(|row| if row.r == 0 { usize::MAX } else { row.p.div_ceil(row.r) });
            r.fail(
                "theta",
                format!("no C <= {} bounds p by C·r", ctx.params.max_constant),
                json!({"condition": "theta", "row": worst}),
            );
        }
    }
    Ok(r.finish())
}

/// Lengths `len` in `n+1..=n_max` reachable from a length-`n` word at `i`,
/// with the number of holes in `w[i+n..i+len)`.
fn forced_extensions(w: &PartialWord, i: usize, n: usize, n_max: usize) -> Vec<(usize, usize)> {
    let mut holes = 0;
    let mut out = Vec::new();
    for len in n + 1..=n_max {
        match w.get(i + len - 1) {
            Some(s) => holes += usize::from(s.is_hole()),
            None => break,
        }
        out.push((len, holes));
    }
    out
}

type Phi = fn(usize) -> u128;

/// `φ(H(n)) / k^n` strictly decreasing and below 1 over the last three holes.
fn limit_hypothesis(hole_function: &[usize], k: usize, phi: Phi) -> bool {
    let len = hole_function.len();
    if len < 3 {
        return false;
    }
    let ratio = |i: usize| -> (u128, u128) { (phi(hole_function[i]), (k as u128).saturating_pow(i as u32 + 1)) };
    let below = |i: usize| ratio(i).0 < ratio(i).1;
    let decreasing = |i: usize| {
        let (a, b) = ratio(i);
        let (c, d) = ratio(i + 1);
        c.saturating_mul(b) < a.saturating_mul(d)
    };
    (len - 3..len).all(below) && decreasing(len - 3) && decreasing(len - 2)
}

fn completion_gap(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::CompletionGap);
    if ctx.spec.hole_supply() != HoleSupply::Infinite {
        r.inconclusive("hypothesis", "needs infinitely many holes");
        return Ok(r.finish());
    }
    let l = ctx.params.horizon;
    let n_max = ctx.params.n_max;
    let alphabet = ctx.spec.alphabet();
    let mut candidates: Vec<(String, FullWord)> = vec![("default".into(), FullWord(vec![0; l]))];
    match completion::greedy_preserving_completion(ctx.spec, n_max, l) {
        Ok(g) => candidates.push(("greedy".into(), g.word)),
        Err(e) => r.note(format!("greedy completion unavailable: {e}")),
    }
    let lead = ctx.params.completion_holes.min(ctx.window.hole_count());
    for u in completion::tail_defaulted_completions(&ctx.window, lead, alphabet, DEFAULT_EXPANSION_CAP)? {
        candidates.push(("tail-exhaustive".into(), u));
    }
    r.param("completions", candidates.len()).param("completion_holes", lead);

    let w_p: Vec<usize> = ctx.indexes()?.iter().map(OccurrenceIndex::len).collect();
    let k = ctx.k();
    let mut summaries: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut analyses = Vec::with_capacity(candidates.len());
    for (kind, u) in &candidates {
        let p_hat = completion::complexity_vector(u, n_max);
        let gaps: Vec<usize> = w_p.iter().zip(&p_hat).map(|(a, b)| a - b).collect();
        let summary = completion::classify_gaps(&gaps);
        *summaries
            .entry(match summary {
                GapSummary::GapZero => "gap-zero",
                GapSummary::GapGrowing => "gap-growing",
                GapSummary::GapBoundedAtHorizon => "gap-bounded-at-horizon",
            })
            .or_default() += 1;
        let forced = match gaps.iter().position(|&g| g > 0) {
            Some(at) => {
                let n = at + 1;
                let present = completion::full_subword_set(u, n);
                let idx = &ctx.indexes()?[at];
                let (_, positions) = idx.words().find(|(v, _)| !present.contains(v)).expect("gap counts a missing word");
                forced_extensions(&ctx.window, positions[0], n, n_max)
            }
            None => Vec::new(),
        };
        analyses.push((kind.as_str(), u, gaps, summary, forced));
    }
    r.param("summaries", &summaries);

    let violation = analyses.iter().find_map(|(kind, u, gaps, _, forced)| {
        forced.iter().find(|&&(len, h)| (gaps[len - 1] as u128) < (k as u128).saturating_pow(h as u32)).map(|&(len, h)| {
            json!({"source": kind, "completion": ctx.render(u), "gaps": gaps, "length": len, "forced_holes": h})
        })
    });
    let plateaus = analyses.iter().filter(|a| a.3 == GapSummary::GapBoundedAtHorizon).count();
    match violation {
        Some(w) => r.fail("no-plateau", "a gap is smaller than the completions forced by a missing word", w),
        None if plateaus == 0 => r.pass("no-plateau", "every completion is gap-zero or gap-growing"),
        None => r.inconclusive(
            "no-plateau",
            format!("{plateaus} completion(s) plateau within n <= {n_max}; the forced growth needs longer subwords"),
        ),
    }

    // a gap-zero completion forces every single-occurrence word to be
    // followed by a hole too far away to be reached by the tested lengths
    let holes = ctx.window.hole_positions();
    match analyses.iter().any(|a| a.3 == GapSummary::GapZero) {
        true => {
            let mut contradiction = None;
            for idx in ctx.indexes()? {
                for (v, i) in idx.single_occurrences() {
                    let reach = holes.iter().find(|&&h| h >= i + v.len()).map(|&j| j - i + 1);
                    if reach.is_some_and(|len| len <= n_max) {
                        contradiction = Some(json!({"word": ctx.render(&v), "position": i, "reach": reach}));
                        break;
                    }
                }
                if contradiction.is_some() {
                    break;
                }
            }
            match contradiction {
                Some(w) => r.fail("gap-zero-implies-recurrent", "Sub-equal completion but a reachable subword occurs once", w),
                None => r.pass("gap-zero-implies-recurrent", "every single occurrence lies beyond the tested lengths"),
            }
        }
        false => match ctx.first_single(n_max)? {
            Some(_) => r.pass("gap-zero-implies-recurrent", "no gap-zero completion and the word is not recurrent at L"),
            None => r.inconclusive("gap-zero-implies-recurrent", "recurrent at L but no Sub-equal completion was found"),
        },
    }

    let hole_fn: Vec<usize> = holes.iter().map(|h| h + 1).collect();
    let phis: [(&str, Phi); 2] = [("phi=n", |n| n as u128), ("phi=n^2", |n| (n as u128) * (n as u128))];
    for (id, phi) in phis {
        if !limit_hypothesis(&hole_fn, k, phi) {
            r.inconclusive(id, "φ(H(n))/k^n is not seen to vanish over the holes in the horizon");
            continue;
        }
        let within: Vec<_> = analyses
            .iter()
            .filter(|(_, _, gaps, _, _)| {
                gaps.iter().any(|&g| g > 0) && gaps.iter().enumerate().all(|(i, &g)| (g as u128) <= phi(i + 1))
            })
            .collect();
        let contradiction = within.iter().find_map(|(kind, u, gaps, _, forced)| {
            forced.iter().find(|&&(len, h)| (k as u128).saturating_pow(h as u32) > phi(len)).map(|&(len, h)| {
                json!({"condition": id, "source": kind, "completion": ctx.render(u), "gaps": gaps, "length": len, "forced_holes": h})
            })
        });
        match (contradiction, within.len()) {
            (Some(w), _) => r.fail(id, "gap stays within φ although a missing word forces more", w),
            (None, 0) => r.pass(id, "no completion with a nonzero gap stays within φ"),
            (None, c) => r.inconclusive(
                id,
                format!("{c} completion(s) stay within φ with a nonzero gap; the forced excess needs longer subwords"),
            ),
        }
    }
    Ok(r.finish())
}

fn ultimate_recurrence_bound(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::UltimateRecurrenceBound);
    let l = ctx.params.horizon;
    let cutoff = ctx.params.cutoff();
    let ur = ctx.ultimate()?;
    r.param("ultimate_recurrence", ur).param("cutoff", cutoff);
    match ur {
        UltimateRecurrence::Recurrent { shift, .. } => {
            let (completions, exhaustive) = ctx.completions()?;
            r.param("completions", completions.len()).param("exhaustive", exhaustive);
            let rr: Vec<usize> = ctx.indexes()?.iter().map(|idx| idx.recurrent(cutoff).len()).collect();
            let mut c_max = 0usize;
            let mut worst = None;
            for u in &completions {
                let p_hat = completion::complexity_vector(u, ctx.params.n_max);
                let excess = p_hat.iter().zip(&rr).map(|(p, r)| p.saturating_sub(*r)).max().unwrap_or(0);
                if excess > c_max || worst.is_none() {
                    c_max = c_max.max(excess);
                    worst = Some(ctx.render(u));
                }
            }
            r.param("C", c_max);
            if c_max > *shift {
                r.note(format!("C = {c_max} exceeds the shift {shift}; the cutoff proxy counts fewer recurrent words"));
            }
            if c_max <= ctx.params.max_constant {
                r.pass("uniform-constant", format!("p_ŵ(n) <= r(n) + {c_max} for every tested completion"));
            } else {
                r.fail(
                    "uniform-constant",
                    format!("no C <= {} bounds p_ŵ − r", ctx.params.max_constant),
                    json!({"condition": "uniform-constant", "completion": worst, "excess": c_max}),
                );
            }
        }
        UltimateRecurrence::Growing { .. } => {
            let n_adv = ctx.params.adversarial_n_max.min(l / 4);
            let adv = completion::adversarial_completion(ctx.spec, n_adv, l, cutoff)?;
            let p_hat = completion::complexity_vector(&adv.word, n_adv);
            let mut excess = Vec::with_capacity(n_adv);
            for n in 1..=n_adv {
                let rn = OccurrenceIndex::build(&ctx.window, n, ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP)?
                    .recurrent(cutoff)
                    .len();
                excess.push(p_hat[n - 1].saturating_sub(rn));
            }
            let max_excess = excess.iter().copied().max().unwrap_or(0);
            r.param("adversarial_n_max", n_adv).param("excess", &excess).param("max_excess", max_excess);
            r.witness(json!({"adversarial_completion_prefix": adv.completed.chars().take(64).collect::<String>()}));
            if increasing_at_checkpoints(&excess) {
                r.pass("unbounded-excess", format!("p_ŵ − r grows to {max_excess} for the interleaved completion"));
            } else {
                r.inconclusive("unbounded-excess", "interleaved completion does not show growth within the range");
            }
        }
        UltimateRecurrence::Exceeded { n } => {
            r.inconclusive("hypothesis", format!("length {n} needs a shift beyond L/4; ultimate recurrence undecided"));
        }
    }
    Ok(r.finish())
}

fn ultimately_recurrent_from_completions(ctx: &Context) -> Result<PredicateReport> {
    let mut r = ctx.base_report(Predicate::UltimatelyRecurrentFromCompletions);
    let l = ctx.params.horizon;
    let n_max = ctx.params.n_max;
    let Ok(p) = ctx.spec.hole_function(1, l) else {
        r.inconclusive("hypothesis", "no hole within the horizon");
        return Ok(r.finish());
    };
    r.param("H(1)", p);
    let target = n_max + p;
    if target > l / 2 {
        r.inconclusive("hypothesis", format!("Sub equality up to length {target} is not supported by L = {l}"));
        return Ok(r.finish());
    }
    let w_p: Vec<usize> = (1..=target)
        .map(|n| OccurrenceIndex::build(&ctx.window, n, ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP).map(|i| i.len()))
        .collect::<Result<_>>()?;
    let sub_equal = |u: &FullWord| completion::complexity_vector(u, target) == w_p;
    let found = match completion::greedy_preserving_completion(ctx.spec, target, l) {
        Ok(g) if sub_equal(&g.word) => Some(("greedy", g.word)),
        _ if ctx.window.hole_count() <= ctx.params.exhaustive_holes => ctx
            .window
            .completions(ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP)?
            .find(|u| sub_equal(u))
            .map(|u| ("exhaustive", u)),
        _ => None,
    };
    let Some((source, u)) = found else {
        r.inconclusive("hypothesis", format!("no completion with Sub equality up to length {target} found"));
        return Ok(r.finish());
    };
    r.param("completion_source", source);
    r.witness(json!({"sub_equal_completion_prefix": ctx.render(&u).chars().take(64).collect::<String>()}));

    let shifted = ctx.spec.shift(p).materialize(l - p);
    for n in 1..=n_max {
        let idx = OccurrenceIndex::build(&shifted, n, ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP)?;
        let prefix = shifted.truncated(n);
        if let Some(z) = prefix
            .completions(ctx.spec.alphabet(), DEFAULT_EXPANSION_CAP)?
            .find(|z| idx.positions(z).map_or(0, <[usize]>::len) < 2)
        {
            r.fail(
                "shift-recurrent",
                format!("prefix completion `{}` of the shifted word occurs once", ctx.render(&z)),
                json!({"condition": "shift-recurrent", "shift": p, "n": n, "word": ctx.render(&z)}),
            );
            return Ok(r.finish());
        }
    }
    r.pass("shift-recurrent", format!("every prefix completion of σ_{p} up to length {n_max} occurs twice within L − {p}"));
    Ok(r.finish())
}

pub fn run_predicate(ctx: &Context, predicate: Predicate) -> PredicateReport {
    let result = match predicate {
        Predicate::Ferenczi => ferenczi(ctx),
        Predicate::RecurrenceEquivalences => recurrence_equivalences(ctx),
        Predicate::NotUltimatelyPeriodic => not_ultimately_periodic(ctx),
        Predicate::RecurrenceFunctionBounds => recurrence_function_bounds(ctx),
        Predicate::MaxComplexityExclusion => max_complexity_exclusion(ctx),
        Predicate::RecurrentCompletions => recurrent_completions(ctx),
        Predicate::DefectDichotomy => defect_dichotomy(ctx),
        Predicate::ThetaEquivalence => theta_equivalence(ctx),
        Predicate::CompletionGap => completion_gap(ctx),
        Predicate::UltimateRecurrenceBound => ultimate_recurrence_bound(ctx),
        Predicate::UltimatelyRecurrentFromCompletions => ultimately_recurrent_from_completions(ctx),
    };
    result.unwrap_or_else(|e| {
        let mut r = ctx.base_report(predicate);
        r.inconclusive("error", format!("error[{}]: {e}", e.code()));
        r.finish()
    })
}

/// Runs the given predicates in parallel; reports keep the input order.
pub fn run(spec: &FamilySpec, params: &VerifyParams, predicates: &[Predicate]) -> Result<Vec<PredicateReport>> {
    use rayon::prelude::*;

    let ctx = Context::new(spec, params.clone())?;
    Ok(predicates.par_iter().map(|&p| run_predicate(&ctx, p)).collect())
}

pub fn run_all(spec: &FamilySpec, params: &VerifyParams) -> Result<Vec<PredicateReport>> {
    run(spec, params, &Predicate::ALL)
}

pub fn any_fail(reports: &[PredicateReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

//! Deterministic descriptions of infinite partial words.
//!
//! A [`FamilySpec`] combines a total base rule (every position gets a symbol),
//! a hole rule, optional letter marks and a shift. It can be materialized to
//! any prefix length; longer prefixes always extend shorter ones.

use std::ops::Range;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::word::{Alphabet, PartialWord, Symbol};

/// Horizon used when checking that hole and mark positions never collide.
const COLLISION_PROBE: usize = 4096;

/// A strictly increasing set of positions, described by its "one plus the
/// n-th position" function `H(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PositionRule {
    None,
    /// Explicit, strictly increasing positions.
    List { positions: Vec<usize> },
    /// `H(n) = n²`.
    Squares,
    /// `H(n) = ⌈2^(4(n−1)/5)⌉`.
    TwoPowFourFifths,
    /// `H(n) = ⌈α^n⌉` with `α > 2`.
    Exponential {
        #[serde(with = "rational_text")]
        alpha: Rational,
    },
    /// `H(n) = ⌈c·n^d⌉` with `c ≥ 1`, `d ≥ 1`.
    Polynomial {
        #[serde(with = "rational_text")]
        coefficient: Rational,
        #[serde(with = "rational_text")]
        degree: Rational,
    },
}

impl PositionRule {
    pub fn validate(&self) -> Result<()> {
        match self {
            PositionRule::List { positions } => {
                if positions.windows(2).any(|p| p[0] >= p[1]) {
                    return Err(Error::Spec("explicit positions must be strictly increasing".into()));
                }
            }
            PositionRule::Exponential { alpha } => {
                if *alpha <= Ratio::from_integer(2) {
                    return Err(Error::Spec(format!(
                        "exponential base must exceed 2, got {}",
                        exact::format_rational(alpha)
                    )));
                }
            }
            PositionRule::Polynomial { coefficient, degree } => {
                if *coefficient < Ratio::one() || *degree < Ratio::one() {
                    return Err(Error::Spec("polynomial rule needs c >= 1 and d >= 1".into()));
                }
                if *degree.denom() > 64 {
                    return Err(Error::Spec("polynomial degree denominator above 64".into()));
                }
            }
            PositionRule::None | PositionRule::Squares | PositionRule::TwoPowFourFifths => {}
        }
        Ok(())
    }

    pub fn is_infinite(&self) -> bool {
        !matches!(self, PositionRule::None | PositionRule::List { .. })
    }

    /// `H(n)` for `n >= 1`, or `None` past the end of a finite rule.
    pub fn value(&self, n: usize) -> Option<BigUint> {
        assert!(n >= 1, "H is indexed from 1");
        match self {
            PositionRule::None => None,
            PositionRule::List { positions } => positions.get(n - 1).map(|&p| BigUint::from(p + 1)),
            PositionRule::Squares => Some(BigUint::from(n) * BigUint::from(n)),
            PositionRule::TwoPowFourFifths => {
                let a = u32::try_from(4 * (n - 1)).ok()?;
                Some(exact::ceil_rational_power(Ratio::from_integer(2), a, 5))
            }
            PositionRule::Exponential { alpha } => {
                Some(exact::ceil_rational_power(*alpha, u32::try_from(n).ok()?, 1))
            }
            PositionRule::Polynomial { coefficient, degree } => {
                let b = u32::try_from(*degree.denom()).ok()?;
                let a = u32::try_from(*degree.numer()).ok()?;
                let num = BigUint::from(*coefficient.numer()).pow(b) * BigUint::from(n).pow(a);
                let den = BigUint::from(*coefficient.denom()).pow(b);
                Some(exact::ceil_root(&num, &den, b))
            }
        }
    }

    /// Positions `H(n) − 1` that fall inside `range`, increasing.
    pub fn positions_in(&self, range: Range<usize>) -> Vec<usize> {
        if let PositionRule::List { positions } = self {
            return positions.iter().copied().filter(|p| range.contains(p)).collect();
        }
        let mut out = Vec::new();
        let mut n = 1;
        while let Some(h) = self.value(n) {
            let pos = exact::to_usize_saturating(&h).saturating_sub(1);
            if pos >= range.end {
                break;
            }
            if pos >= range.start {
                out.push(pos);
            }
            n += 1;
        }
        out
    }

    fn finite_positions(&self) -> &[usize] {
        match self {
            PositionRule::List { positions } => positions,
            _ => &[],
        }
    }
}

mod rational_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::{self, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&exact::format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Rational::from_integer(n)),
            Raw::Text(t) => exact::parse_rational(&t).map_err(serde::de::Error::custom),
        }
    }
}

/// The rule assigning a symbol to every position before holes and marks are
/// applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Constant(u8),
    /// `x y^ω`; `y` is non-empty. Either part may contain holes.
    UltimatelyPeriodic { prefix: PartialWord, period: PartialWord },
    /// Thue–Morse over the first two letters.
    ThueMorse,
    /// `prefix` followed by `rest`, which restarts its indexing at 0.
    PrefixThen { prefix: PartialWord, rest: Box<Base> },
}

impl Base {
    pub fn symbol_at(&self, i: usize) -> Symbol {
        match self {
            Base::Constant(l) => Symbol::Letter(*l),
            Base::UltimatelyPeriodic { prefix, period } => match prefix.get(i) {
                Some(s) => s,
                None => period.symbols()[(i - prefix.len()) % period.len()],
            },
            Base::ThueMorse => Symbol::Letter((i.count_ones() % 2) as u8),
            Base::PrefixThen { prefix, rest } => match prefix.get(i) {
                Some(s) => s,
                None => rest.symbol_at(i - prefix.len()),
            },
        }
    }

    fn has_infinitely_many_holes(&self) -> bool {
        match self {
            Base::UltimatelyPeriodic { period, .. } => period.hole_count() > 0,
            Base::PrefixThen { rest, .. } => rest.has_infinitely_many_holes(),
            Base::Constant(_) | Base::ThueMorse => false,
        }
    }

    fn finite_hole_positions(&self) -> Vec<usize> {
        match self {
            Base::UltimatelyPeriodic { prefix, .. } => prefix.hole_positions(),
            Base::PrefixThen { prefix, rest } => {
                let mut out = prefix.hole_positions();
                out.extend(rest.finite_hole_positions().into_iter().map(|p| p + prefix.len()));
                out
            }
            Base::Constant(_) | Base::ThueMorse => Vec::new(),
        }
    }

    fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        match self {
            Base::Constant(l) if (*l as usize) >= alphabet.size() => {
                Err(Error::Spec(format!("letter index {l} outside alphabet")))
            }
            Base::UltimatelyPeriodic { period, .. } if period.is_empty() => {
                Err(Error::Spec("periodic part must be non-empty".into()))
            }
            Base::PrefixThen { rest, .. } => rest.validate(alphabet),
            _ => Ok(()),
        }
    }
}

/// Positions overwritten with a fixed letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mark {
    pub positions: PositionRule,
    pub letter: u8,
}

/// How many holes the infinite word has, read off its description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HoleSupply {
    None,
    Finite,
    Infinite,
}

/// Deterministic description of an infinite partial word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    name: String,
    alphabet: Alphabet,
    base: Base,
    holes: PositionRule,
    marks: Vec<Mark>,
    shift: usize,
}

impl FamilySpec {
    pub fn new(name: impl Into<String>, alphabet: Alphabet, base: Base, holes: PositionRule) -> Result<Self> {
        Self::with_marks(name, alphabet, base, holes, Vec::new())
    }

    pub fn with_marks(
        name: impl Into<String>,
        alphabet: Alphabet,
        base: Base,
        holes: PositionRule,
        marks: Vec<Mark>,
    ) -> Result<Self> {
        let spec = FamilySpec { name: name.into(), alphabet, base, holes, marks, shift: 0 };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        self.base.validate(&self.alphabet)?;
        self.holes.validate()?;
        for m in &self.marks {
            m.positions.validate()?;
            if (m.letter as usize) >= self.alphabet.size() {
                return Err(Error::Spec(format!("mark letter index {} outside alphabet", m.letter)));
            }
        }
        if self.marks.is_empty() {
            return Ok(());
        }
        let probe = 0..COLLISION_PROBE;
        let mut holes = self.holes.positions_in(probe.clone());
        holes.extend(probe.clone().filter(|&i| self.base.symbol_at(i).is_hole()));
        holes.sort_unstable();
        for m in &self.marks {
            if let Some(p) = m.positions.positions_in(probe.clone()).into_iter().find(|p| holes.binary_search(p).is_ok())
            {
                return Err(Error::Spec(format!("position {p} is both a hole and a mark")));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn hole_rule(&self) -> &PositionRule {
        &self.holes
    }

    pub fn offset(&self) -> usize {
        self.shift
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The length-`len` prefix.
    pub fn materialize(&self, len: usize) -> PartialWord {
        let range = self.shift..self.shift + len;
        let mut symbols: Vec<Symbol> = range.clone().map(|i| self.base.symbol_at(i)).collect();
        for m in &self.marks {
            for p in m.positions.positions_in(range.clone()) {
                symbols[p - self.shift] = Symbol::Letter(m.letter);
            }
        }
        for p in self.holes.positions_in(range) {
            symbols[p - self.shift] = Symbol::Hole;
        }
        PartialWord::new(symbols)
    }

    /// `σ_p`: the word read from position `p` on.
    pub fn shift(&self, p: usize) -> FamilySpec {
        let mut out = self.clone();
        out.shift += p;
        if p > 0 {
            out.name = format!("shift({},{})", self.name, p);
        }
        out
    }

    pub fn hole_supply(&self) -> HoleSupply {
        if self.holes.is_infinite() || self.base.has_infinitely_many_holes() {
            return HoleSupply::Infinite;
        }
        let any_after_shift = self
            .base
            .finite_hole_positions()
            .into_iter()
            .chain(self.holes.finite_positions().iter().copied())
            .any(|p| p >= self.shift);
        if any_after_shift {
            HoleSupply::Finite
        } else {
            HoleSupply::None
        }
    }

    /// Positions of the holes in the length-`horizon` prefix.
    pub fn hole_positions(&self, horizon: usize) -> Vec<usize> {
        self.materialize(horizon).hole_positions()
    }

    /// `H(n)`: one plus the position of the n-th hole.
    pub fn hole_function(&self, n: usize, horizon: usize) -> Result<usize> {
        if n == 0 {
            return Err(Error::Argument("hole function is indexed from 1".into()));
        }
        let holes = self.hole_positions(horizon);
        holes.get(n - 1).map(|p| p + 1).ok_or_else(|| {
            Error::InsufficientHorizon(format!(
                "{} has {} holes within horizon {horizon}, need {n}",
                self.name,
                holes.len()
            ))
        })
    }

    /// `h(n) = H(n) − H(n−1)` for `n >= 2`.
    pub fn gap(&self, n: usize, horizon: usize) -> Result<usize> {
        if n < 2 {
            return Err(Error::Argument("gap function is defined from n = 2".into()));
        }
        Ok(self.hole_function(n, horizon)? - self.hole_function(n - 1, horizon)?)
    }

    /// Gaps `h(2), h(3), …` of the holes inside the horizon.
    pub fn gaps(&self, horizon: usize) -> Vec<usize> {
        self.hole_positions(horizon).windows(2).map(|p| p[1] - p[0]).collect()
    }

    /// Whether `h(n) < h(n+1)` for every checkable `n >= max(from, 2)`.
    pub fn gaps_eventually_increasing(&self, from: usize, horizon: usize) -> Result<bool> {
        let holes = self.hole_positions(horizon).len();
        if holes < from + 2 {
            return Err(Error::InsufficientHorizon(format!(
                "{} has {holes} holes within horizon {horizon}, need {}",
                self.name,
                from + 2
            )));
        }
        let gaps = self.gaps(horizon);
        // gaps[i] = h(i + 2)
        let start = from.max(2) - 2;
        Ok(gaps[start..].windows(2).all(|g| g[0] < g[1]))
    }

    /// Smallest `N` from which the gaps strictly increase up to the horizon,
    /// backed by at least `min_comparisons` comparisons.
    pub fn increasing_gaps_from(&self, horizon: usize, min_comparisons: usize) -> Option<usize> {
        let gaps = self.gaps(horizon);
        let mut start = gaps.len();
        while start > 0 && (start == gaps.len() || gaps[start - 1] < gaps[start]) {
            start -= 1;
        }
        // gaps[start..] is the longest strictly increasing tail
        let comparisons = gaps.len().saturating_sub(start).saturating_sub(1);
        (comparisons >= min_comparisons).then_some(start + 2)
    }

    pub fn to_document(&self) -> FamilyDocument {
        FamilyDocument {
            name: Some(self.name.clone()),
            alphabet: self.alphabet.clone(),
            base: BaseDocument::from_base(&self.base, &self.alphabet),
            holes: self.holes.clone(),
            marks: self
                .marks
                .iter()
                .map(|m| MarkDocument { positions: m.positions.clone(), letter: self.alphabet.letter(m.letter) })
                .collect(),
            shift: self.shift,
        }
    }

    pub fn from_document(doc: FamilyDocument) -> Result<Self> {
        let alphabet = doc.alphabet;
        let base = doc.base.to_base(&alphabet)?;
        let marks = doc
            .marks
            .into_iter()
            .map(|m| Ok(Mark { positions: m.positions, letter: alphabet.parse_letter(m.letter)? }))
            .collect::<Result<Vec<_>>>()?;
        let name = doc.name.unwrap_or_else(|| "custom".into());
        let spec = FamilySpec::with_marks(name, alphabet, base, doc.holes, marks)?;
        Ok(spec.shift_unnamed(doc.shift))
    }

    fn shift_unnamed(mut self, p: usize) -> Self {
        self.shift += p;
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FamilyDocument = serde_json::from_str(text)
            .map_err(|e| Error::Spec(format!("family document: {e}")))?;
        Self::from_document(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("family document serializes")
    }
}

/// On-disk form of a [`FamilySpec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub alphabet: Alphabet,
    pub base: BaseDocument,
    #[serde(default = "no_holes")]
    pub holes: PositionRule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub marks: Vec<MarkDocument>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub shift: usize,
}

fn no_holes() -> PositionRule {
    PositionRule::None
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BaseDocument {
    Constant { letter: char },
    UltimatelyPeriodic {
        #[serde(default)]
        prefix: String,
        period: String,
    },
    ThueMorse,
    PrefixThen { prefix: String, rest: Box<BaseDocument> },
}

impl BaseDocument {
    fn to_base(&self, alphabet: &Alphabet) -> Result<Base> {
        Ok(match self {
            BaseDocument::Constant { letter } => Base::Constant(alphabet.parse_letter(*letter)?),
            BaseDocument::UltimatelyPeriodic { prefix, period } => Base::UltimatelyPeriodic {
                prefix: PartialWord::parse(prefix, alphabet)?,
                period: PartialWord::parse(period, alphabet)?,
            },
            BaseDocument::ThueMorse => Base::ThueMorse,
            BaseDocument::PrefixThen { prefix, rest } => Base::PrefixThen {
                prefix: PartialWord::parse(prefix, alphabet)?,
                rest: Box::new(rest.to_base(alphabet)?),
            },
        })
    }

    fn from_base(base: &Base, alphabet: &Alphabet) -> Self {
        match base {
            Base::Constant(l) => BaseDocument::Constant { letter: alphabet.letter(*l) },
            Base::UltimatelyPeriodic { prefix, period } => BaseDocument::UltimatelyPeriodic {
                prefix: prefix.render(alphabet),
                period: period.render(alphabet),
            },
            Base::ThueMorse => BaseDocument::ThueMorse,
            Base::PrefixThen { prefix, rest } => BaseDocument::PrefixThen {
                prefix: prefix.render(alphabet),
                rest: Box::new(BaseDocument::from_base(rest, alphabet)),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkDocument {
    pub positions: PositionRule,
    pub letter: char,
}

/// One entry of the preset listing.
#[derive(Clone, Debug, Serialize)]
pub struct PresetInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo {
        name: "trivial-holes",
        description: "every position is a hole",
        anchor: "the all-hole word, recurrent and periodic with maximal complexity",
    },
    PresetInfo {
        name: "hole-then-a",
        description: "a single hole followed by a^ω",
        anchor: "Sub-equal to its completion ba^ω yet not recurrent",
    },
    PresetInfo {
        name: "paper-example",
        description: "a^ω with holes at ⌈2^(4(n−1)/5)⌉ − 1",
        anchor: "hole-function example with complexity no full word achieves",
    },
    PresetInfo {
        name: "b-at-squares",
        description: "a^ω with b at positions n² − 1",
        anchor: "linear r_w(n) = n+1 but not ultimately recurrent",
    },
    PresetInfo {
        name: "holes-at-squares",
        description: "a^ω with holes at positions n² − 1",
        anchor: "eventually increasing gap function h(n) = 2n − 1",
    },
    PresetInfo {
        name: "exp-holes:<α>",
        description: "a^ω with holes at ⌈α^n⌉ − 1, α > 2 rational",
        anchor: "exponential hole function with r_w(n) = n+1",
    },
    PresetInfo {
        name: "ultimately-periodic:<x>:<y>",
        description: "x y^ω; x and y may contain holes",
        anchor: "ultimately periodic words xy^ω",
    },
    PresetInfo {
        name: "thue-morse",
        description: "the Thue–Morse word over {a, b}",
        anchor: "uniformly recurrent full-word baseline",
    },
];

/// Names of the eight catalog families, with their parameters pinned.
pub const CATALOG: &[&str] = &[
    "trivial-holes",
    "hole-then-a",
    "paper-example",
    "b-at-squares",
    "holes-at-squares",
    "exp-holes:3",
    "ultimately-periodic::a*",
    "thue-morse",
];

pub fn catalog() -> Vec<FamilySpec> {
    CATALOG.iter().map(|n| preset(n).expect("catalog presets are valid")).collect()
}

/// Resolves a preset name, including the parameterized forms
/// `exp-holes:<α>` and `ultimately-periodic:<x>:<y>`.
pub fn preset(name: &str) -> Result<FamilySpec> {
    let ab = Alphabet::binary();
    let a = Base::Constant(0);
    let unknown = || Error::Spec(format!("unknown family preset `{name}`"));
    let spec = match name {
        "trivial-holes" => FamilySpec::new(name, ab, periodic("", "*")?, PositionRule::None)?,
        "hole-then-a" => FamilySpec::new(name, ab, periodic("*", "a")?, PositionRule::None)?,
        "paper-example" => FamilySpec::new(name, ab, a, PositionRule::TwoPowFourFifths)?,
        "b-at-squares" => FamilySpec::with_marks(
            name,
            ab,
            a,
            PositionRule::None,
            vec![Mark { positions: PositionRule::Squares, letter: 1 }],
        )?,
        "holes-at-squares" => FamilySpec::new(name, ab, a, PositionRule::Squares)?,
        "thue-morse" => FamilySpec::new(name, ab, Base::ThueMorse, PositionRule::None)?,
        _ => {
            if let Some(alpha) = name.strip_prefix("exp-holes:") {
                let alpha = exact::parse_rational(alpha)?;
                FamilySpec::new(name, ab, a, PositionRule::Exponential { alpha })?
            } else if let Some(rest) = name.strip_prefix("ultimately-periodic:") {
                let (x, y) = rest.split_once(':').ok_or_else(unknown)?;
                FamilySpec::new(name, ab, periodic(x, y)?, PositionRule::None)?
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(spec)
}

fn periodic(prefix: &str, period: &str) -> Result<Base> {
    let ab = Alphabet::binary();
    Ok(Base::UltimatelyPeriodic {
        prefix: PartialWord::parse(prefix, &ab)?,
        period: PartialWord::parse(period, &ab)?,
    })
}

/// Integer value of `H(n)` if it fits in `usize`.
pub fn rule_value(rule: &PositionRule, n: usize) -> Option<usize> {
    rule.value(n).and_then(|v| v.to_usize())
}

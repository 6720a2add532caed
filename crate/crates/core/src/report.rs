//! CSV and JSON views of the domain types.
//!
//! Big integers are always written as decimal strings so that no consumer
//! has to squeeze them into a native number type.

use num_bigint::BigInt;
use serde::Serialize;

use crate::cf::{Convergent, FiniteCF};
use crate::iteration::{BoundRow, IterationTrace, MonicClassification, MonicTerm, MonicVerdict};
use crate::pell::PellSolution;
use crate::quadratic::QuadraticNumber;
use crate::rational::Rational;
use crate::surd::{PeriodicCF, QuadraticSurd};

pub const TRACE_CSV_HEADER: &str = "n,numerator,denominator,decimal";

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// One row of a trace table. A pole is written as `1/0` with decimal `inf`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub n: usize,
    pub numerator: String,
    pub denominator: String,
    pub decimal: String,
}

impl TraceRow {
    pub fn from_rational(n: usize, r: &Rational, digits: usize) -> Self {
        TraceRow {
            n,
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
            decimal: r.to_decimal(digits),
        }
    }

    pub fn from_monic(n: usize, t: &MonicTerm, digits: usize) -> Self {
        match t {
            MonicTerm::Value(r) => Self::from_rational(n, r, digits),
            MonicTerm::Pole => TraceRow {
                n,
                numerator: "1".into(),
                denominator: "0".into(),
                decimal: "inf".into(),
            },
        }
    }
}

pub fn rational_rows(terms: &[Rational], digits: usize) -> Vec<TraceRow> {
    terms
        .iter()
        .enumerate()
        .map(|(n, r)| TraceRow::from_rational(n, r, digits))
        .collect()
}

pub fn monic_rows(terms: &[MonicTerm], digits: usize) -> Vec<TraceRow> {
    terms
        .iter()
        .enumerate()
        .map(|(n, t)| TraceRow::from_monic(n, t, digits))
        .collect()
}

pub fn convergent_rows(convergents: &[Convergent], digits: usize) -> Vec<TraceRow> {
    convergents
        .iter()
        .map(|c| TraceRow::from_rational(c.index, &c.value(), digits))
        .collect()
}

/// `n,numerator,denominator,decimal` with one line per row.
pub fn trace_csv(rows: &[TraceRow]) -> String {
    let mut out = String::from(TRACE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.numerator, r.denominator, r.decimal));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalView {
    pub numerator: String,
    pub denominator: String,
    pub decimal: String,
}

impl RationalView {
    pub fn new(r: &Rational, digits: usize) -> Self {
        RationalView {
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
            decimal: r.to_decimal(digits),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteView {
    pub coefficients: Vec<String>,
    pub text: String,
}

impl From<&FiniteCF> for FiniteView {
    fn from(cf: &FiniteCF) -> Self {
        FiniteView {
            coefficients: strings(cf.coefficients()),
            text: cf.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodicView {
    pub pre_period: Vec<String>,
    pub period: Vec<String>,
    pub text: String,
}

impl From<&PeriodicCF> for PeriodicView {
    fn from(cf: &PeriodicCF) -> Self {
        PeriodicView {
            pre_period: strings(cf.pre_period()),
            period: strings(cf.period()),
            text: cf.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurdView {
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "D")]
    pub d: String,
    #[serde(rename = "Q")]
    pub q: String,
    pub text: String,
    pub decimal: String,
}

impl SurdView {
    pub fn new(s: &QuadraticSurd, digits: usize) -> Self {
        SurdView {
            p: s.p().to_string(),
            d: s.d().to_string(),
            q: s.q().to_string(),
            text: s.to_string(),
            decimal: s.decimal(digits),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergentView {
    pub index: usize,
    pub p: String,
    pub q: String,
}

impl From<&Convergent> for ConvergentView {
    fn from(c: &Convergent) -> Self {
        ConvergentView {
            index: c.index,
            p: c.p.to_string(),
            q: c.q.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PellView {
    pub n: String,
    pub x: String,
    pub y: String,
    pub sign: i8,
}

impl From<&PellSolution> for PellView {
    fn from(s: &PellSolution) -> Self {
        PellView {
            n: s.n.to_string(),
            x: s.x.to_string(),
            y: s.y.to_string(),
            sign: s.sign,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceView {
    pub kappa: String,
    pub seed: String,
    pub terms: Vec<TraceRow>,
}

impl TraceView {
    pub fn new(t: &IterationTrace, digits: usize) -> Self {
        TraceView {
            kappa: t.kappa.to_string(),
            seed: t.seed.to_string(),
            terms: rational_rows(&t.terms, digits),
        }
    }
}

/// `a + b*sqrt(d)` with each part spelled out.
#[derive(Clone, Debug, Serialize)]
pub struct QuadraticView {
    pub rational_part: String,
    pub irrational_coefficient: String,
    pub radicand: String,
    pub text: String,
    pub decimal: String,
}

impl QuadraticView {
    pub fn new(x: &QuadraticNumber, digits: usize) -> Self {
        QuadraticView {
            rational_part: x.rational_part().to_string(),
            irrational_coefficient: x.irrational_coefficient().to_string(),
            radicand: x.radicand().to_string(),
            text: quadratic_text(x),
            decimal: x.to_decimal(digits),
        }
    }
}

/// Renders irrational values in surd form `(P+√D)/Q`, rationals as `p/q`.
pub fn quadratic_text(x: &QuadraticNumber) -> String {
    match QuadraticSurd::from_quadratic(x) {
        Some(s) => s.to_string(),
        None => x.to_string(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationView {
    pub b: String,
    pub c: String,
    pub discriminant: String,
    pub verdict: &'static str,
    pub root: Option<QuadraticView>,
    pub ratio: Option<QuadraticView>,
}

impl ClassificationView {
    pub fn new(m: &MonicClassification, digits: usize) -> Self {
        let (root, ratio) = match &m.verdict {
            MonicVerdict::ConvergesDoubleRoot { root } => (
                Some(QuadraticView::new(&root.clone().into(), digits)),
                Some(QuadraticView::new(&Rational::one().into(), digits)),
            ),
            MonicVerdict::ConvergesLargerRoot { root, ratio } => (
                Some(QuadraticView::new(root, digits)),
                Some(QuadraticView::new(ratio, digits)),
            ),
            _ => (None, None),
        };
        ClassificationView {
            b: m.b.to_string(),
            c: m.c.to_string(),
            discriminant: m.discriminant.to_string(),
            verdict: m.verdict.label(),
            root,
            ratio,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundRowView {
    pub n: usize,
    pub lhs: QuadraticView,
    pub rhs: QuadraticView,
    pub holds: bool,
}

impl BoundRowView {
    pub fn new(row: &BoundRow, digits: usize) -> Self {
        BoundRowView {
            n: row.n,
            lhs: QuadraticView::new(&row.lhs, digits),
            rhs: QuadraticView::new(&row.rhs, digits),
            holds: row.holds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iteration::{iterate_simple, Seed};

    #[test]
    fn csv_schema() {
        let t = iterate_simple(1, 3, Seed::Recurrence).unwrap();
        assert_eq!(
            trace_csv(&rational_rows(&t.terms, 3)),
            "n,numerator,denominator,decimal\n0,1,1,1.000\n1,2,1,2.000\n2,3,2,1.500\n"
        );
        let pole = TraceRow::from_monic(4, &MonicTerm::Pole, 3);
        assert_eq!((pole.numerator.as_str(), pole.denominator.as_str(), pole.decimal.as_str()), ("1", "0", "inf"));
    }

    #[test]
    fn json_uses_strings_for_integers() {
        let s = QuadraticSurd::new(1, 5, 2).unwrap();
        let v = serde_json::to_value(SurdView::new(&s, 3)).unwrap();
        assert_eq!(v["P"], "1");
        assert_eq!(v["D"], "5");
        assert_eq!(v["Q"], "2");
        assert_eq!(v["text"], "(1+√5)/2");
        assert_eq!(v["decimal"], "1.618");
        let p = crate::pell::solve_positive(61, 1).unwrap();
        let v = serde_json::to_value(PellView::from(&p[0])).unwrap();
        assert_eq!(v["x"], "1766319049");
    }

    #[test]
    fn quadratic_text_prefers_surd_form() {
        let phi = QuadraticSurd::new(1, 5, 2).unwrap().to_quadratic();
        assert_eq!(quadratic_text(&phi), "(1+√5)/2");
        assert_eq!(quadratic_text(&Rational::new(1, 2).unwrap().into()), "1/2");
    }
}

//! Answer and trace-snapshot values shared by the catalog, the scorers and
//! the serializers.

use serde::{Deserialize, Serialize};

/// How a predicted final answer is compared against gold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompareMode {
    /// Exact value equality (numeric text like "2.0" equals 2).
    Exact,
    /// Element-wise absolute tolerance of 0.1.
    AbsTol,
    /// Real and imaginary parts each within 0.1.
    ComplexAbsTol,
}

/// Absolute tolerance used by [`CompareMode::AbsTol`] and
/// [`CompareMode::ComplexAbsTol`].
pub const NUMERIC_TOLERANCE: f64 = 0.1;

/// Tolerance for answers that are printed with two decimals (optimal BST).
pub const FIXED2_TOLERANCE: f64 = 0.005;

/// A final answer value in one of the task answer kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Answer {
    /// Scalar integer (index, length, weight sum, ...).
    Int(i64),
    /// Scalar printed with two decimals (optimal BST expected cost).
    Fixed2(f64),
    /// List of integers (arrays, distance vectors, 0/1 membership flags).
    IntList(Vec<i64>),
    /// List of integer pairs (bridge endpoints).
    PairList(Vec<(i64, i64)>),
    /// Square integer matrix (all-pairs distances), row major.
    Matrix(Vec<Vec<i64>>),
    /// Pair of floats (regression intercept and slope).
    FloatPair(f64, f64),
    /// List of complex numbers, serialized in `a+bj` form.
    #[serde(with = "complex_list_serde")]
    ComplexList(Vec<(f64, f64)>),
    /// Valid / Invalid verdict.
    Label(Validity),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validity {
    Valid,
    Invalid,
}

impl std::fmt::Display for Validity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Validity::Valid => write!(f, "Valid"),
            Validity::Invalid => write!(f, "Invalid"),
        }
    }
}

impl Answer {
    /// Compares two answers under `mode`.
    ///
    /// List lengths must match exactly in every mode; a kind mismatch is
    /// simply incorrect.
    pub fn matches(&self, other: &Answer, mode: CompareMode) -> bool {
        use Answer::*;
        match (self, other) {
            (Int(a), Int(b)) => match mode {
                CompareMode::Exact => a == b,
                _ => (*a as f64 - *b as f64).abs() <= NUMERIC_TOLERANCE,
            },
            (Fixed2(a), Fixed2(b)) => (a - b).abs() <= FIXED2_TOLERANCE,
            (IntList(a), IntList(b)) => {
                a.len() == b.len()
                    && a.iter().zip(b).all(|(x, y)| match mode {
                        CompareMode::Exact => x == y,
                        _ => (*x as f64 - *y as f64).abs() <= NUMERIC_TOLERANCE,
                    })
            }
            (PairList(a), PairList(b)) => a == b,
            (Matrix(a), Matrix(b)) => a == b,
            (FloatPair(a1, a2), FloatPair(b1, b2)) => {
                (a1 - b1).abs() <= NUMERIC_TOLERANCE && (a2 - b2).abs() <= NUMERIC_TOLERANCE
            }
            (ComplexList(a), ComplexList(b)) => {
                a.len() == b.len()
                    && a.iter().zip(b).all(|((ar, ai), (br, bi))| {
                        (ar - br).abs() <= NUMERIC_TOLERANCE && (ai - bi).abs() <= NUMERIC_TOLERANCE
                    })
            }
            (Label(a), Label(b)) => a == b,
            _ => false,
        }
    }
}

/// One snapshot of the designated trace variable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Snapshot {
    /// Array or queue contents at the trace point.
    Ints(Vec<i64>),
    /// Full dynamic-programming matrix at the trace point (two-decimal
    /// values).
    Matrix(Vec<Vec<f64>>),
}

impl Snapshot {
    /// Snapshot equality; matrices compare after rounding to two decimals,
    /// matching the precision the prompts print.
    pub fn same_as(&self, other: &Snapshot) -> bool {
        match (self, other) {
            (Snapshot::Ints(a), Snapshot::Ints(b)) => a == b,
            (Snapshot::Matrix(a), Snapshot::Matrix(b)) => {
                a.len() == b.len()
                    && a.iter().zip(b).all(|(ra, rb)| {
                        ra.len() == rb.len()
                            && ra.iter().zip(rb).all(|(x, y)| cents(*x) == cents(*y))
                    })
            }
            _ => false,
        }
    }
}

fn cents(x: f64) -> i64 {
    (x * 100.0).round() as i64
}

/// Rounds to two decimals.
pub fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Formats a two-decimal value the way the prompts print it in fixed form,
/// e.g. `0.10`.
pub fn fmt_fixed2(x: f64) -> String {
    format!("{:.2}", x)
}

/// Formats a two-decimal value the way the prompts print coordinates:
/// minimal digits with at least one decimal, e.g. `8.1`, `13.0`, `11.67`.
pub fn fmt_short2(x: f64) -> String {
    let mut s = format!("{:.2}", x);
    if s.ends_with('0') {
        s.pop();
    }
    s
}

/// Formats a complex value in the `a+bj` serialization form.
pub fn fmt_complex(re: f64, im: f64) -> String {
    let re = round2(re);
    let im = round2(im);
    let re_s = fmt_short2(re).trim_end_matches(".0").to_string();
    let im_abs = fmt_short2(im.abs()).trim_end_matches(".0").to_string();
    let sign = if im.is_sign_negative() && im != 0.0 { '-' } else { '+' };
    format!("{}{}{}j", re_s, sign, im_abs)
}

mod complex_list_serde {
    use super::fmt_complex;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[(f64, f64)], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|&(re, im)| fmt_complex(re, im)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(f64, f64)>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| parse_complex(s).ok_or_else(|| D::Error::custom(format!("bad complex `{s}`"))))
            .collect()
    }

    /// Parses `a+bj` / `a-bj` (also bare reals and `bj`-only forms).
    pub fn parse_complex(s: &str) -> Option<(f64, f64)> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if let Some(body) = t.strip_suffix(['j', 'i']) {
            // find the sign that splits real and imaginary parts
            let bytes = body.as_bytes();
            for idx in (1..bytes.len()).rev() {
                let c = bytes[idx] as char;
                if (c == '+' || c == '-') && bytes[idx - 1] as char != 'e' {
                    let re: f64 = body[..idx].trim().replace(' ', "").parse().ok()?;
                    let im_str = body[idx..].trim().replace(' ', "");
                    let im: f64 = if im_str == "+" || im_str == "-" {
                        format!("{}1", im_str).parse().ok()?
                    } else {
                        im_str.parse().ok()?
                    };
                    return Some((re, im));
                }
            }
            // pure imaginary
            let im: f64 = match body.trim() {
                "" | "+" => 1.0,
                "-" => -1.0,
                b => b.replace(' ', "").parse().ok()?,
            };
            return Some((0.0, im));
        }
        t.replace(' ', "").parse().ok().map(|re| (re, 0.0))
    }
}

pub use complex_list_serde::parse_complex;

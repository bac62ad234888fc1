//! Exact evaluation of the counting inequalities behind the
//! `(1 + o(1)) n^{3/2} / sqrt(10)` upper bound.
//!
//! Expanding the final inequality with `C(x, 2) = x(x - 1)/2`:
//!
//! ```text
//! n C(4E/n, 2) + 4n C(E/n, 2) <= 2 C(n, 2) + 21 E
//! (8E^2/n - 2E) + (2E^2/n - 2E) <= n(n - 1) + 21 E
//! 10 E^2 - 25 n E - n^2 (n - 1) <= 0
//! ```
//!
//! so the largest admissible `E` is `n (25 + sqrt(40 n + 585)) / 20`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::berge::find_berge_cycle;
use crate::blocks::{block_degrees, block_excess, decompose};
use crate::census::census;
use crate::error::{Error, Result};
use crate::hypergraph::{degrees, Hypergraph};

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `x (x - 1) / 2`, also for fractional `x`.
pub fn binom2(x: &BigRational) -> BigRational {
    x * (x - BigRational::one()) / int(2)
}

/// Renders as `p/q` in lowest terms.
pub fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

/// Decimal rendering with `places` digits after the point, rounded half up.
pub fn fmt_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * int(scale.clone());
    let rounded = (scaled + BigRational::new(1.into(), 2.into())).floor().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let (whole, frac) = (&abs / &scale, &abs % &scale);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>width$}", width = places as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub label: &'static str,
    pub relation: Relation,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
    pub pass: bool,
}

impl Inequality {
    fn new(label: &'static str, relation: Relation, lhs: BigRational, rhs: BigRational) -> Inequality {
        let pass = match relation {
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
        };
        Inequality { label, relation, lhs, rhs, pass }
    }
}

/// The largest real `E` with `10 E^2 - 25 n E - n^2 (n - 1) <= 0`, held
/// exactly as `n (25 + sqrt(40 n + 585)) / 20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UpperBound {
    n: u64,
}

impl UpperBound {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn radicand(&self) -> BigInt {
        BigInt::from(40u32) * self.n + 585u32
    }

    /// Whether `m` edges satisfy the quadratic inequality.
    pub fn admits(&self, m: u64) -> bool {
        let (n, m) = (BigInt::from(self.n), BigInt::from(m));
        BigInt::from(10) * &m * &m - BigInt::from(25) * &n * &m - &n * &n * (&n - 1) <= BigInt::zero()
    }

    /// Largest integer not exceeding the root.
    pub fn floor(&self) -> u64 {
        let s = self.radicand().sqrt();
        let guess = (BigInt::from(self.n) * (BigInt::from(25) + s) / 20u32).to_u64().unwrap();
        let mut m = guess;
        while self.admits(m + 1) {
            m += 1;
        }
        while !self.admits(m) {
            m -= 1;
        }
        m
    }

    /// Rational interval `[lo, hi]` containing the root, of width at most
    /// `n / (20 * 10^digits)`.
    pub fn enclosure(&self, digits: u32) -> (BigRational, BigRational) {
        let scale = BigInt::from(10u32).pow(digits);
        let s = (self.radicand() * &scale * &scale).sqrt();
        let exact = &s * &s == self.radicand() * &scale * &scale;
        let lo_sqrt = BigRational::new(s.clone(), scale.clone());
        let hi_sqrt = if exact { lo_sqrt.clone() } else { BigRational::new(s + 1, scale) };
        let f = |r: BigRational| (int(25) + r) * int(self.n) / int(20);
        (f(lo_sqrt), f(hi_sqrt))
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.n as f64;
        n * (25.0 + (40.0 * n + 585.0).sqrt()) / 20.0
    }

    /// `bound * sqrt(10) / n^{3/2}`; tends to 1 from above.
    pub fn normalized(&self) -> f64 {
        let n = self.n as f64;
        10f64.sqrt() * (25.0 + (40.0 * n + 585.0).sqrt()) / (20.0 * n.sqrt())
    }

    pub fn expression(&self) -> String {
        format!("{}*(25+sqrt({}))/20", self.n, self.radicand())
    }
}

impl Serialize for UpperBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (lo, hi) = self.enclosure(12);
        let mut st = s.serialize_struct("UpperBound", 5)?;
        st.serialize_field("expression", &self.expression())?;
        st.serialize_field("floor", &self.floor())?;
        st.serialize_field("lower", &fmt_rational(&lo))?;
        st.serialize_field("upper", &fmt_rational(&hi))?;
        st.serialize_field("decimal", &fmt_decimal(&lo, 6))?;
        st.end()
    }
}

/// Edge bound for `n` vertices from the final inequality.
pub fn upper_bound(n: u64) -> Result<UpperBound> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("upper bound needs n >= 3, got {n}")));
    }
    Ok(UpperBound { n })
}

fn pow10(e: i64) -> BigRational {
    let p = int(BigInt::from(10u32).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `m / n^{3/2}` rounded to nearest at 12 significant digits.
pub fn ratio(n: u64, m: u64) -> BigRational {
    if m == 0 || n == 0 {
        return BigRational::zero();
    }
    // square of the value, exactly
    let sq = BigRational::new(BigInt::from(m) * m, BigInt::from(n).pow(3));
    // decimal exponent e with 10^e <= value < 10^(e+1)
    let approx = m as f64 / (n as f64).powf(1.5);
    let mut e = approx.log10().floor() as i64;
    while sq < pow10(2 * e) {
        e -= 1;
    }
    while sq >= pow10(2 * (e + 1)) {
        e += 1;
    }
    let s = 11 - e;
    let twice = (sq * int(4) * pow10(2 * s)).floor().to_integer().sqrt();
    let k = (twice + 1) / 2;
    int(k) * pow10(-s)
}

pub fn ratio_f64(n: u64, m: u64) -> f64 {
    ratio(n, m).to_f64().unwrap()
}

/// `n C(mean, 2)` and `sum C(x, 2)` for a list of values; by convexity the
/// first never exceeds the second.
pub fn jensen_sides(values: &[BigRational]) -> (BigRational, BigRational) {
    if values.is_empty() {
        return (BigRational::zero(), BigRational::zero());
    }
    let n = int(values.len());
    let mean = values.iter().fold(BigRational::zero(), |a, x| a + x) / &n;
    let lhs = &n * binom2(&mean);
    let rhs = values.iter().map(binom2).fold(BigRational::zero(), |a, x| a + x);
    (lhs, rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// eq1 .. eq6, in order.
    pub inequalities: Vec<Inequality>,
    /// Every block has excess sum at least its edge count.
    pub block_excess_pass: bool,
    pub upper_bound: UpperBound,
    pub within_upper_bound: bool,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.inequalities.iter().all(|i| i.pass) && self.block_excess_pass && self.within_upper_bound
    }

    pub fn get(&self, label: &str) -> Option<&Inequality> {
        self.inequalities.iter().find(|i| i.label == label)
    }
}

/// Evaluates both sides of each inequality in the chain on `h`. Refuses
/// hypergraphs with isolated vertices or with a Berge C4.
pub fn verify_chain(h: &Hypergraph) -> Result<BoundReport> {
    let isolated = h.isolated_vertices();
    if !isolated.is_empty() {
        return Err(Error::IsolatedVertices(isolated));
    }
    if let Some(w) = find_berge_cycle(h, 4)? {
        return Err(Error::NotBc4Free(w));
    }
    let n = h.vertex_count() as u64;
    let m = h.edge_count() as u64;
    let bound = upper_bound(n.max(3))?;

    let profile = degrees(h);
    let decomposition = decompose(h);
    let db = block_degrees(h, &decomposition);
    let report = census(h);

    let paths: BigRational = int(report.total_3paths);
    let sum_ex = int(profile.total_excess());
    let sum_db = int(db.iter().sum::<usize>());
    let sum_db2: BigRational = db.iter().map(|&d| binom2(&int(d))).fold(BigRational::zero(), |a, x| a + x);
    let pairs2 = int(2) * binom2(&int(n));
    let nr = int(n);
    let mr = int(m);
    let jensen_shadow = &nr * binom2(&(int(4) * &mr / &nr));
    let jensen_block = &nr * binom2(&(&mr / &nr));

    debug_assert_eq!(db.iter().sum::<usize>(), decomposition.blocks.iter().map(|b| b.vertex_count()).sum::<usize>());

    let inequalities = vec![
        Inequality::new("eq1", Relation::AtMost, paths.clone(), &pairs2 - int(4) * &sum_db2 + int(21) * &mr),
        Inequality::new("eq2", Relation::AtLeast, sum_ex, mr.clone()),
        Inequality::new("eq3", Relation::AtLeast, sum_db, mr.clone()),
        Inequality::new("eq4", Relation::AtMost, jensen_shadow.clone(), paths),
        Inequality::new("eq5", Relation::AtMost, jensen_block.clone(), sum_db2),
        Inequality::new("eq6", Relation::AtMost, jensen_shadow + int(4) * jensen_block, pairs2 + int(21) * &mr),
    ];

    let block_excess_pass = decomposition.blocks.iter().all(|b| block_excess(h, b) >= b.edge_count() as i64);

    Ok(BoundReport {
        vertex_count: h.vertex_count(),
        edge_count: h.edge_count(),
        inequalities,
        block_excess_pass,
        within_upper_bound: bound.admits(m),
        upper_bound: bound,
    })
}

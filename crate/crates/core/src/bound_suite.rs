//! Upper bounds for the index at infinity and their check against the
//! computed index.

use num_traits::Zero;

use crate::infinity_analysis::InfinityProfile;
use crate::Rational;

/// One bound with its value and whether the index respects it.
#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub name: &'static str,
    pub value: Rational,
    pub satisfied: bool,
    /// Whether a failure is a contradiction rather than information.
    pub hard: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub bezout: Bound,
    pub durfee: Bound,
    pub linear: Bound,
    pub refined: Bound,
    pub refined2: Bound,
    pub delta: Bound,
    pub signgap: Bound,
    pub l1_case: Bound,
}

impl BoundReport {
    pub fn all(&self) -> [&Bound; 8] {
        [
            &self.bezout,
            &self.durfee,
            &self.linear,
            &self.refined,
            &self.refined2,
            &self.delta,
            &self.signgap,
            &self.l1_case,
        ]
    }

    /// Hard bounds the index breaks.
    pub fn violations(&self) -> Vec<&'static str> {
        self.all()
            .iter()
            .filter(|b| b.hard && !b.satisfied)
            .map(|b| b.name)
            .collect()
    }
}

/// `⌊r⌋`, replaced by 0 when negative.
pub fn nonneg_floor(num: i64, den: i64) -> i64 {
    num.div_euclid(den).max(0)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// Evaluate every bound for `index` from the profiles of the real points
/// of `{f_d = 0}`.
pub fn evaluate_bounds(index: i64, profiles: &[InfinityProfile], lf: usize, d: usize, d_re: usize) -> BoundReport {
    let idx = q(index);
    let d = d as i64;
    let exact = profiles.iter().all(|p| p.exact);
    let linear = q(1 + d_re as i64 - 2 * lf as i64);

    let mut refined_gap = Rational::zero();
    let mut refined2_gap = Rational::zero();
    let mut delta_gap = Rational::zero();
    let mut sign_gap = Rational::zero();
    for p in profiles {
        let (r, s, k) = (p.deg_r_red as i64, p.deg_s as i64, p.deg_k as i64);
        refined_gap += half() * q(nonneg_floor(r - 1, 2)) + q(s + k);
        refined2_gap += q(nonneg_floor(r, 2) + k);
        delta_gap += q(nonneg_floor(p.delta as i64, 2));
        sign_gap += half() * q(nonneg_floor(p.r_p as i64, 2) + nonneg_floor(p.s_p as i64, 2)) + q(s + k);
    }

    let le = |v: &Rational| &idx <= v;
    let make = |name, value: Rational, hard| Bound {
        name,
        satisfied: le(&value),
        value,
        hard,
    };
    let l1 = match lf {
        0 => q(1),
        1 if d <= 3 => q(0),
        _ => q(d - 3),
    };
    let mut l1_case = make("l1_case", l1, true);
    if lf == 0 {
        l1_case.satisfied = index == 1;
    }
    BoundReport {
        bezout: Bound {
            name: "bezout",
            value: q(d - 1),
            satisfied: index.abs() <= d - 1,
            hard: true,
        },
        durfee: make("durfee", q((d - 3).max(1)), true),
        linear: make("linear", linear.clone(), true),
        refined: make("refined", &linear - refined_gap, exact),
        refined2: make("refined2", &linear - refined2_gap, exact),
        delta: make("delta", &linear - delta_gap, exact),
        signgap: make("signgap", &linear - sign_gap, false),
        l1_case,
    }
}

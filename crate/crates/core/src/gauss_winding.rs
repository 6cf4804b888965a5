//! Index at infinity as the degree of the Gauss map on a large circle.
//!
//! The circle is parametrized by
//! `x = a1 + R(1-t^2)/(1+t^2)`, `y = a2 + 2Rt/(1+t^2)`, which runs
//! counterclockwise as `t` increases and reaches `(a1 - R, a2)` only at
//! `t = ±∞`; that single point is evaluated directly.

use num_traits::{One, Zero};

use crate::exact_algebra::{
    isolate_real_roots, AlgebraicPoint, Axis, Rational, RealRoot, Sign, UniPoly,
};
use crate::{Error, QBiPoly, QPoly, Result};

/// Circle of radius `radius` around `center`.
#[derive(Clone, Debug, PartialEq)]
pub struct Circle {
    pub center: (Rational, Rational),
    pub radius: Rational,
}

impl Circle {
    pub fn new(center: (Rational, Rational), radius: Rational) -> Self {
        Circle { center, radius }
    }

    /// Numerators `xn`, `yn` and the common denominator `1 + t^2`.
    pub fn parametrization(&self) -> (QPoly, QPoly, QPoly) {
        let (a1, a2) = &self.center;
        let r = &self.radius;
        let one = Rational::one();
        let den = UniPoly::new(vec![one.clone(), Rational::zero(), one]);
        let xn = den.scale(a1) + UniPoly::new(vec![r.clone(), Rational::zero(), -r.clone()]);
        let yn = den.scale(a2) + UniPoly::new(vec![Rational::zero(), r * Rational::from_integer(2.into())]);
        (xn, yn, den)
    }

    /// Numerator of `g` restricted to the circle; its sign is the sign of `g`.
    pub fn pullback(&self, g: &QBiPoly) -> QPoly {
        let (xn, yn, den) = self.parametrization();
        g.pullback(&xn, &yn, &den)
    }

    pub fn point_at(&self, t: &Rational) -> (Rational, Rational) {
        let (xn, yn, den) = self.parametrization();
        let d = den.eval(t);
        (xn.eval(t) / &d, yn.eval(t) / &d)
    }

    /// The point reached at `t = ±∞`.
    pub fn point_at_infinity(&self) -> (Rational, Rational) {
        (&self.center.0 - &self.radius, self.center.1.clone())
    }

    pub fn algebraic_point(&self, t: &RealRoot) -> AlgebraicPoint {
        let (xn, yn, den) = self.parametrization();
        AlgebraicPoint {
            param: t.clone(),
            xn,
            yn,
            den,
        }
    }

    /// Angle of the circle point with parameter `t`, in `(-π, π]`.
    pub fn angle_of(t: f64) -> f64 {
        2.0 * t.atan()
    }
}

/// Which gradient component vanishes at an event.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Vanishing {
    Fx,
    Fy,
    Neither,
}

#[derive(Clone, Debug)]
pub struct SignEvent {
    /// `None` for the point at `t = ±∞`.
    pub anchor: Option<RealRoot>,
    pub vanishing: Vanishing,
    /// Signs of `(f_x, f_y)` on the open arc that follows counterclockwise.
    pub after: (Sign, Sign),
}

/// Cyclic sign pattern of the gradient along the circle.
#[derive(Clone, Debug)]
pub struct CircleSignSequence {
    pub radius: Rational,
    pub events: Vec<SignEvent>,
}

impl CircleSignSequence {
    /// Signed quarter-turns summed around the circle.
    pub fn quarter_turns(&self) -> Result<i64> {
        let n = self.events.len();
        let mut total = 0;
        for k in 0..n {
            let a = quadrant(self.events[k].after);
            let b = quadrant(self.events[(k + 1) % n].after);
            total += match (b + 4 - a) % 4 {
                0 => 0,
                1 => 1,
                3 => -1,
                _ => return Err(Error::SingularPointOnCircle),
            };
        }
        Ok(total)
    }
}

fn quadrant(s: (Sign, Sign)) -> i64 {
    match s {
        (Sign::Positive, Sign::Positive) => 0,
        (Sign::Negative, Sign::Positive) => 1,
        (Sign::Negative, Sign::Negative) => 2,
        _ => 3,
    }
}

/// Numerators of `f_x` and `f_y` on the circle.
pub fn circle_pullback(f: &QBiPoly, circle: &Circle) -> (QPoly, QPoly) {
    (
        circle.pullback(&f.differentiate(Axis::X)),
        circle.pullback(&f.differentiate(Axis::Y)),
    )
}

pub fn sign_sequence(f: &QBiPoly, circle: &Circle) -> Result<CircleSignSequence> {
    let (p, q) = circle_pullback(f, circle);
    let fx = f.differentiate(Axis::X);
    let fy = f.differentiate(Axis::Y);
    let (ix, iy) = circle.point_at_infinity();
    let at_inf = (Sign::of(&fx.eval(&ix, &iy)), Sign::of(&fy.eval(&ix, &iy)));
    if at_inf == (Sign::Zero, Sign::Zero) {
        return Err(Error::SingularPointOnCircle);
    }
    if p.is_zero() || q.is_zero() {
        // the gradient stays on one axis; it must not vanish anywhere
        let other = if p.is_zero() { &q } else { &p };
        if other.is_zero() || !isolate_real_roots(other)?.is_empty() {
            return Err(Error::SingularPointOnCircle);
        }
        return Ok(CircleSignSequence {
            radius: circle.radius.clone(),
            events: Vec::new(),
        });
    }
    if p.poly_gcd(&q).degree().unwrap_or(0) > 0 {
        let g = p.poly_gcd(&q);
        if !isolate_real_roots(&g)?.is_empty() {
            return Err(Error::SingularPointOnCircle);
        }
    }
    let roots = isolate_real_roots(&(p.clone() * q.clone()))?;
    let signs_at = |t: &Rational| (Sign::of(&p.eval(t)), Sign::of(&q.eval(t)));
    let first_sample = match roots.first() {
        Some(r) => r.lo.clone(),
        None => Rational::zero(),
    };
    let mut events = Vec::with_capacity(roots.len() + 1);
    events.push(SignEvent {
        anchor: None,
        vanishing: match at_inf {
            (Sign::Zero, _) => Vanishing::Fx,
            (_, Sign::Zero) => Vanishing::Fy,
            _ => Vanishing::Neither,
        },
        after: signs_at(&first_sample),
    });
    for r in &roots {
        let vanishing = if r.is_root_of(&p) {
            Vanishing::Fx
        } else {
            Vanishing::Fy
        };
        events.push(SignEvent {
            anchor: Some(r.clone()),
            vanishing,
            after: signs_at(&r.hi),
        });
    }
    Ok(CircleSignSequence {
        radius: circle.radius.clone(),
        events,
    })
}

/// Degree of `grad f / |grad f|` on the circle.
pub fn winding_index(f: &QBiPoly, circle: &Circle) -> Result<i64> {
    let seq = sign_sequence(f, circle)?;
    let turns = seq.quarter_turns()?;
    if turns % 4 != 0 {
        return Err(Error::Other(format!(
            "quarter-turn total {} not divisible by 4",
            turns
        )));
    }
    Ok(turns / 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;
    use crate::input_output::parse_poly;

    fn origin(r: i64) -> Circle {
        Circle::new((int(0), int(0)), int(r))
    }

    #[test]
    fn pullback_of_radial_gradient() {
        let (p, q) = circle_pullback(&parse_poly("x^2 + y^2").unwrap(), &origin(1));
        assert_eq!(p.monic(), UniPoly::new(vec![int(-1), int(0), int(1)]));
        assert_eq!(q.monic(), UniPoly::new(vec![int(0), int(1)]));
    }

    #[test]
    fn pullback_of_saddle() {
        let (p, q) = circle_pullback(&parse_poly("x*y").unwrap(), &origin(1));
        assert_eq!(p.monic(), UniPoly::new(vec![int(0), int(1)]));
        assert_eq!(q.monic(), UniPoly::new(vec![int(-1), int(0), int(1)]));
    }

    #[test]
    fn elementary_indices() {
        assert_eq!(winding_index(&parse_poly("x^2 + y^2").unwrap(), &origin(1)).unwrap(), 1);
        assert_eq!(winding_index(&parse_poly("x*y").unwrap(), &origin(1)).unwrap(), -1);
        assert_eq!(winding_index(&parse_poly("x").unwrap(), &origin(1)).unwrap(), 0);
        assert_eq!(winding_index(&parse_poly("x^2*y + x").unwrap(), &origin(5)).unwrap(), 0);
        assert_eq!(
            winding_index(&parse_poly("y^5 + x^2*y^3 - y").unwrap(), &origin(8)).unwrap(),
            2
        );
    }

    #[test]
    fn singular_point_on_circle_is_reported() {
        let f = parse_poly("(x-1)^2 + y^2").unwrap();
        assert!(matches!(
            winding_index(&f, &origin(1)),
            Err(Error::SingularPointOnCircle)
        ));
        // critical point exactly at t = ∞
        let g = parse_poly("(x+1)^2 + y^2").unwrap();
        assert!(matches!(
            winding_index(&g, &origin(1)),
            Err(Error::SingularPointOnCircle)
        ));
    }

    #[test]
    fn broughton_pullback_has_no_common_root() {
        let (p, q) = circle_pullback(&parse_poly("x^2*y + x").unwrap(), &origin(5));
        assert!(p.degree().unwrap() <= 4 && q.degree().unwrap() <= 4);
        assert!(p.poly_gcd(&q).degree() == Some(0));
    }
}

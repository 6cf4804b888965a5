//! Critical values of `f` through a rational univariate representation of
//! the critical points.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::exact_algebra::{
    isolate_real_roots, resultant, subresultant, Axis, Rational, RealRoot, UniPoly,
};
use crate::{Error, QBiPoly, QPoly, Result};

type Rec = UniPoly<QPoly>;

const SHEARS: [i64; 11] = [0, 1, -1, 2, -2, 3, -3, 5, -5, 7, 11];

/// Distinct real critical values, ascending.
pub fn critical_values(f: &QBiPoly) -> Result<Vec<RealRoot>> {
    let fx = f.differentiate(Axis::X);
    let fy = f.differentiate(Axis::Y);
    if fx.is_zero() || fy.is_zero() {
        if fx.is_constant() && fy.is_constant() {
            return Ok(Vec::new());
        }
        return Err(Error::NonIsolatedSingularities);
    }
    for k in SHEARS {
        if let Some(v) = with_shear(f, &fx, &fy, &Rational::from_integer(k.into()))? {
            return Ok(v);
        }
    }
    Err(Error::Other("no shear separates the critical points".into()))
}

fn reduce(p: &QPoly, g: &QPoly) -> QPoly {
    p.div_rem(g).1
}

/// `None` when the shear `u = x + k y` fails to separate critical points.
fn with_shear(f: &QBiPoly, fx: &QBiPoly, fy: &QBiPoly, k: &Rational) -> Result<Option<Vec<RealRoot>>> {
    // x = u - k y
    let xs = QBiPoly::x() - QBiPoly::term(k.clone(), 0, 1);
    let ys = QBiPoly::y();
    let f1 = fx.compose(&xs, &ys);
    let f2 = fy.compose(&xs, &ys);
    let p1: Rec = f1.to_recursive(Axis::Y);
    let p2: Rec = f2.to_recursive(Axis::Y);
    if !p1.lc().is_constant() && !p2.lc().is_constant() {
        return Ok(None);
    }
    let res = resultant(&p1, &p2)?;
    if res.is_zero() {
        return Err(Error::NonIsolatedSingularities);
    }
    if res.is_constant() {
        return Ok(Some(Vec::new()));
    }
    let mut rest = res.squarefree_part().monic();
    let mut values: Vec<RealRoot> = Vec::new();
    let top = p1.degree().unwrap_or(0).min(p2.degree().unwrap_or(0));
    for j in 1..=top.max(1) {
        if rest.is_constant() {
            break;
        }
        let s = subresultant(&p1, &p2, j);
        let a = s.coeff(j);
        let shared = rest.poly_gcd(&a).monic();
        let g = rest.div_rem(&shared).0.monic();
        rest = shared;
        if g.is_constant() {
            continue;
        }
        let c = s.coeff(j - 1);
        if !single_point(&s, &a, &c, j, &g) {
            return Ok(None);
        }
        let jq = Rational::from_integer((j as i64).into());
        // y0 = -c / (j a) modulo g
        let inv = inverse_mod(&reduce(&a.scale(&jq), &g), &g)
            .ok_or_else(|| Error::Other("leading subresultant coefficient vanishes on a critical point".into()))?;
        let y0 = reduce(&(-c.clone() * inv), &g);
        let x0 = reduce(&(UniPoly::var() - y0.scale(k)), &g);
        let num = eval_mod(f, &x0, &y0, &g);
        for v in values_at_roots(&g, &num)? {
            if !values.iter().any(|w| w.cmp_root(&v) == Ordering::Equal) {
                values.push(v);
            }
        }
    }
    if !rest.is_constant() {
        return Ok(None);
    }
    values.sort_by(|a, b| a.cmp_root(b));
    Ok(Some(values))
}

/// Inverse of `a` modulo `g`, if they are coprime.
fn inverse_mod(a: &QPoly, g: &QPoly) -> Option<QPoly> {
    let (mut r0, mut r1) = (g.clone(), a.clone());
    let (mut s0, mut s1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0 - q * s1.clone();
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let c = r0.lc();
    Some(reduce(&s0, g).scale(&(Rational::one() / c)))
}

/// `f(x, y)` modulo `g`, for `x`, `y` already reduced.
fn eval_mod(f: &QBiPoly, x: &QPoly, y: &QPoly, g: &QPoly) -> QPoly {
    let mut xp = vec![QPoly::one()];
    let mut yp = vec![QPoly::one()];
    let mut acc = QPoly::zero();
    for (&(i, j), c) in f.terms() {
        while xp.len() <= i as usize {
            let next = reduce(&(xp[xp.len() - 1].clone() * x.clone()), g);
            xp.push(next);
        }
        while yp.len() <= j as usize {
            let next = reduce(&(yp[yp.len() - 1].clone() * y.clone()), g);
            yp.push(next);
        }
        acc = acc + reduce(&(xp[i as usize].clone() * yp[j as usize].clone()), g).scale(c);
    }
    acc
}

/// `(j a)^j S_j ≡ a (j a y + c)^j` modulo `g`: one point over each root.
fn single_point(s: &Rec, a: &QPoly, c: &QPoly, j: usize, g: &QPoly) -> bool {
    let jq = Rational::from_integer((j as i64).into());
    let ja = a.scale(&jq);
    let lhs = s.map(|q| q.clone() * ja.pow(j));
    let lin: Rec = UniPoly::new(vec![c.clone(), ja]);
    let rhs = lin.pow(j).map(|q| q.clone() * a.clone());
    let n = lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0));
    (0..=n).all(|i| reduce(&(lhs.coeff(i) - rhs.coeff(i)), g).is_zero())
}

/// `Res_u(g, num - t)`, of degree `deg g` in `t`, by interpolation at
/// `t = 0, 1, ..., deg g`.
fn value_polynomial(g: &QPoly, num: &QPoly) -> Result<QPoly> {
    if num.is_constant() {
        return Ok(UniPoly::new(vec![-num.coeff(0), Rational::one()]));
    }
    let n = g.degree().unwrap_or(0);
    let ts: Vec<Rational> = (0..=n).map(|i| Rational::from_integer((i as i64).into())).collect();
    let mut dd = Vec::with_capacity(n + 1);
    for t in &ts {
        dd.push(resultant(g, &(num.clone() - QPoly::constant(t.clone())))?);
    }
    // Newton divided differences, then expansion
    for k in 1..=n {
        for i in (k..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&ts[i] - &ts[i - k]);
        }
    }
    let mut p = QPoly::constant(dd[n].clone());
    for i in (0..n).rev() {
        p = p * UniPoly::new(vec![-ts[i].clone(), Rational::one()]) + QPoly::constant(dd[i].clone());
    }
    Ok(p)
}

/// Values `num(u)` at the real roots of `g`.
fn values_at_roots(g: &QPoly, num: &QPoly) -> Result<Vec<RealRoot>> {
    let roots = isolate_real_roots(g)?;
    if roots.is_empty() {
        return Ok(Vec::new());
    }
    let p = value_polynomial(g, num)?;
    if p.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    let mut targets = isolate_real_roots(&p)?;
    let mut out = Vec::new();
    for mut u in roots {
        loop {
            let iv = u.interval();
            let v = num.eval_interval(&iv);
            let hits: Vec<usize> = (0..targets.len())
                .filter(|&i| targets[i].lo <= v.hi && targets[i].hi >= v.lo)
                .collect();
            if hits.len() == 1 {
                let mut t = targets[hits[0]].clone();
                t.exactify();
                out.push(t);
                break;
            }
            for &i in &hits {
                targets[i].refine();
            }
            u.refine();
            if let Some(r) = u.to_rational() {
                let v = num.eval(&r);
                out.push(RealRoot::from_rational(&v));
                break;
            }
        }
    }
    Ok(out)
}

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value as Json;

use super::cyclo::{CycloField, CycloNum};
use super::poly::IntPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    /// `q` is an indeterminate: coefficients live in `Q(q)`.
    Generic,
    /// `q` is a primitive `p`-th root of unity: coefficients live in `Q(zeta_p)`.
    Torsion,
}

/// Where scalars live. Cheap to clone; two contexts are equal when they
/// describe the same field.
#[derive(Clone)]
pub struct ScalarContext {
    inner: Arc<Inner>,
}

struct Inner {
    field: Option<CycloField>,
    memo: RwLock<HashMap<MemoKey, Value>>,
}

/// Memoized combinatorial scalars, keyed per context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) enum MemoKey {
    QBinomial(u32, u32),
    StructC(u32, u32),
    StructD(u32, u32),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) enum Value {
    Generic(RatFunc),
    Torsion(CycloNum),
}

/// An exact field element tied to its [`ScalarContext`].
#[derive(Clone)]
pub struct Scalar {
    ctx: ScalarContext,
    val: Value,
}

impl ScalarContext {
    pub fn generic() -> Self {
        ScalarContext {
            inner: Arc::new(Inner {
                field: None,
                memo: RwLock::new(HashMap::new()),
            }),
        }
    }

    /// `q` a primitive `p`-th root of unity, `p >= 2`.
    pub fn torsion(p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!(
                "torsion order must be at least 2, got {p}"
            )));
        }
        Ok(ScalarContext {
            inner: Arc::new(Inner {
                field: Some(CycloField::new(p)),
                memo: RwLock::new(HashMap::new()),
            }),
        })
    }

    pub fn mode(&self) -> ScalarMode {
        match self.inner.field {
            None => ScalarMode::Generic,
            Some(_) => ScalarMode::Torsion,
        }
    }

    pub fn is_torsion(&self) -> bool {
        self.inner.field.is_some()
    }

    /// The torsion order `p`, if any.
    pub fn order(&self) -> Option<usize> {
        self.inner.field.as_ref().map(CycloField::order)
    }

    /// `Phi_p` in torsion mode.
    pub fn modulus(&self) -> Option<&IntPoly> {
        self.inner.field.as_ref().map(CycloField::modulus)
    }

    pub(crate) fn field(&self) -> Option<&CycloField> {
        self.inner.field.as_ref()
    }

    pub fn require_torsion(&self, what: &'static str) -> Result<usize> {
        self.order().ok_or(Error::RequiresTorsion(what))
    }

    pub fn check_same(&self, other: &ScalarContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.to_string(), other.to_string()))
        }
    }

    pub(crate) fn wrap(&self, val: Value) -> Scalar {
        Scalar {
            ctx: self.clone(),
            val,
        }
    }

    pub(crate) fn memo_get(&self, key: MemoKey) -> Option<Scalar> {
        let memo = self.inner.memo.read().unwrap();
        memo.get(&key).map(|v| self.wrap(v.clone()))
    }

    pub(crate) fn memo_put(&self, key: MemoKey, s: &Scalar) {
        let mut memo = self.inner.memo.write().unwrap();
        memo.entry(key).or_insert_with(|| s.val.clone());
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(&self, r: BigRational) -> Scalar {
        let (n, d) = (r.numer().clone(), r.denom().clone());
        let val = match self.field() {
            None => Value::Generic(RatFunc::from_rational(n, d).expect("nonzero denominator")),
            Some(f) => Value::Torsion(f.from_rational(n, d)),
        };
        self.wrap(val)
    }

    /// The value of an integer polynomial at `q`.
    pub fn from_poly(&self, poly: &IntPoly) -> Scalar {
        let val = match self.field() {
            None => Value::Generic(RatFunc::from_poly(poly.clone())),
            Some(f) => Value::Torsion(f.from_poly(poly, BigInt::one())),
        };
        self.wrap(val)
    }

    pub fn q(&self) -> Scalar {
        self.q_pow(1)
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(&self, n: i64) -> Scalar {
        let val = match self.field() {
            Some(f) => Value::Torsion(f.zeta_pow(n)),
            None => {
                let mono = IntPoly::monomial(BigInt::one(), n.unsigned_abs() as usize);
                if n >= 0 {
                    Value::Generic(RatFunc::from_poly(mono))
                } else {
                    Value::Generic(RatFunc::new(IntPoly::one(), mono).unwrap())
                }
            }
        };
        self.wrap(val)
    }

    /// Reads a value written by [`Scalar::to_json`].
    pub fn scalar_from_json(&self, json: &Json) -> Result<Scalar> {
        match (self.field(), json) {
            (None, Json::String(s)) => RatFunc::parse_serial(s)
                .map(|r| self.wrap(Value::Generic(r)))
                .ok_or_else(|| Error::Serialization(format!("bad rational function {s:?}"))),
            (Some(f), Json::Array(items)) => {
                if items.len() != f.degree() {
                    return Err(Error::Serialization(format!(
                        "expected {} coordinates, found {}",
                        f.degree(),
                        items.len()
                    )));
                }
                let coords = items
                    .iter()
                    .map(|it| {
                        it.as_str()
                            .and_then(|s| s.parse::<BigRational>().ok())
                            .ok_or_else(|| {
                                Error::Serialization(format!("bad rational coordinate {it}"))
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.wrap(Value::Torsion(CycloNum::from_coordinates(&coords))))
            }
            _ => Err(Error::Serialization(format!(
                "scalar {json} does not match a {} context",
                self
            ))),
        }
    }
}

impl PartialEq for ScalarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.order() == other.order()
    }
}

impl Eq for ScalarContext {}

impl fmt::Display for ScalarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            None => write!(f, "generic"),
            Some(p) => write!(f, "torsion(p={p})"),
        }
    }
}

impl fmt::Debug for ScalarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarContext({self})")
    }
}

impl Scalar {
    pub fn context(&self) -> &ScalarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.val {
            Value::Generic(r) => r.is_zero(),
            Value::Torsion(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.val {
            Value::Generic(r) => r.is_one(),
            Value::Torsion(c) => c.is_one(),
        }
    }

    fn same(&self, other: &Scalar) {
        assert!(
            self.ctx == other.ctx,
            "scalar arithmetic across contexts ({} vs {})",
            self.ctx,
            other.ctx
        );
    }

    pub fn inv(&self) -> Result<Scalar> {
        let val = match &self.val {
            Value::Generic(r) => Value::Generic(r.inv().ok_or(Error::DivisionByZero)?),
            Value::Torsion(c) => Value::Torsion(self.field().inv(c).ok_or(Error::DivisionByZero)?),
        };
        Ok(self.ctx.wrap(val))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    fn field(&self) -> &CycloField {
        self.ctx
            .field()
            .expect("torsion value in a torsion context")
    }

    /// The value as a rational number, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.val {
            Value::Generic(r) => {
                if r.numer().degree().unwrap_or(0) == 0 && r.denom().degree() == Some(0) {
                    Some(BigRational::new(r.numer().coeff(0), r.denom().coeff(0)))
                } else {
                    None
                }
            }
            Value::Torsion(c) => c.as_rational(),
        }
    }

    /// The underlying rational function in generic mode.
    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match &self.val {
            Value::Generic(r) => Some(r),
            Value::Torsion(_) => None,
        }
    }

    /// Power-basis coordinates in torsion mode.
    pub fn coordinates(&self) -> Option<Vec<BigRational>> {
        match &self.val {
            Value::Torsion(c) => Some(c.coordinates()),
            Value::Generic(_) => None,
        }
    }

    /// Evaluates a generic scalar at `q = zeta_p`. Fails when the denominator
    /// vanishes there.
    pub fn specialize(&self, target: &ScalarContext) -> Result<Scalar> {
        let r = match &self.val {
            Value::Generic(r) => r,
            Value::Torsion(_) => {
                self.ctx.check_same(target)?;
                return Ok(self.clone());
            }
        };
        let f = target
            .field()
            .ok_or(Error::RequiresTorsion("specialization"))?;
        let num = f.from_poly(r.numer(), BigInt::one());
        let den = f.from_poly(r.denom(), BigInt::one());
        let inv = f.inv(&den).ok_or(Error::DivisionByZero)?;
        Ok(target.wrap(Value::Torsion(f.mul(&num, &inv))))
    }

    /// Generic: `"(P)/(Q)"`; torsion: array of `phi(p)` strings `"a/b"`.
    pub fn to_json(&self) -> Json {
        match &self.val {
            Value::Generic(r) => Json::String(r.to_serial_string()),
            Value::Torsion(c) => Json::Array(
                c.coordinates()
                    .iter()
                    .map(|x| Json::String(format!("{}/{}", x.numer(), x.denom())))
                    .collect(),
            ),
        }
    }

    /// Whether the printed form needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        match &self.val {
            Value::Generic(r) => {
                !(r.is_polynomial()
                    && r.numer().coeffs().iter().filter(|c| !c.is_zero()).count() <= 1)
                    && !(r.numer().degree() == Some(0) && r.denom().degree() == Some(0))
            }
            Value::Torsion(c) => c.numerators().iter().filter(|x| !x.is_zero()).count() > 1,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.val {
            Value::Generic(r) => f.write_str(&r.to_pretty()),
            Value::Torsion(c) => {
                let coords = c.coordinates();
                let mut out = String::new();
                for (i, x) in coords.iter().enumerate().rev() {
                    if x.is_zero() {
                        continue;
                    }
                    let neg = x.is_negative();
                    let mag = x.abs();
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push(if neg { '-' } else { '+' });
                    }
                    let var = match i {
                        0 => String::new(),
                        1 => "q".to_string(),
                        _ => format!("q^{i}"),
                    };
                    if var.is_empty() {
                        out.push_str(&mag.to_string());
                    } else if mag.is_one() {
                        out.push_str(&var);
                    } else {
                        out.push_str(&format!("{mag}*{var}"));
                    }
                }
                if out.is_empty() {
                    out.push('0');
                }
                f.write_str(&out)
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar[{}]({self})", self.ctx)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.val == other.val
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.same(rhs);
        let val = match (&self.val, &rhs.val) {
            (Value::Generic(a), Value::Generic(b)) => Value::Generic(a.add(b)),
            (Value::Torsion(a), Value::Torsion(b)) => Value::Torsion(self.field().add(a, b)),
            _ => unreachable!("values disagree with their context"),
        };
        self.ctx.wrap(val)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.same(rhs);
        let val = match (&self.val, &rhs.val) {
            (Value::Generic(a), Value::Generic(b)) => Value::Generic(a.mul(b)),
            (Value::Torsion(a), Value::Torsion(b)) => Value::Torsion(self.field().mul(a, b)),
            _ => unreachable!("values disagree with their context"),
        };
        self.ctx.wrap(val)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let val = match &self.val {
            Value::Generic(a) => Value::Generic(a.neg()),
            Value::Torsion(a) => Value::Torsion(a.neg()),
        };
        self.ctx.wrap(val)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

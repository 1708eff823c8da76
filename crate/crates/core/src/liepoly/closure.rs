//! Exact bracket closure of `{A, B}` on a bounded window.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::heisenberg::{Element, Monomial};
use crate::qscalar::ScalarContext;

/// Bounds `k <= kmax`, `|d| <= dmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub kmax: u32,
    pub dmax: u32,
}

impl Window {
    pub fn new(kmax: u32, dmax: u32) -> Self {
        Window { kmax, dmax }
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.k <= self.kmax && m.d.unsigned_abs() <= self.dmax
    }

    /// All monomials of the window in canonical order.
    pub fn monomials(&self) -> Vec<Monomial> {
        let d = self.dmax as i32;
        (-d..=d)
            .flat_map(|d| (0..=self.kmax).map(move |k| Monomial::new(k, d)))
            .collect()
    }
}

/// A reduced row-echelon basis: each row has coefficient 1 on its pivot
/// (its lowest monomial) and 0 on every other row's pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ctx: ScalarContext,
    pub window: Window,
    rows: BTreeMap<Monomial, Element>,
}

impl SubspaceBasis {
    pub fn new(ctx: &ScalarContext, window: Window) -> Self {
        SubspaceBasis {
            ctx: ctx.clone(),
            window,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Element> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.rows.keys().copied()
    }

    /// `v` minus its projection along the current rows.
    pub fn reduce(&self, v: &Element) -> Element {
        let mut out = v.clone();
        let hits: Vec<Monomial> = v.support().filter(|m| self.rows.contains_key(m)).collect();
        for m in hits {
            let c = out.coeff(&m);
            if !c.is_zero() {
                for (rm, rc) in self.rows[&m].terms() {
                    out.add_term(*rm, -(&c * rc));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.reduce(&v.filter(|m| self.window.contains(*m)))
            .is_zero()
    }

    /// Adds `v` (restricted to the window); returns whether the span grew.
    pub fn insert(&mut self, v: &Element) -> bool {
        let r = self.reduce(&v.filter(|m| self.window.contains(*m)));
        let Some((&pivot, lead)) = r.leading() else {
            return false;
        };
        let row = r.scale(&lead.inv().expect("nonzero leading coefficient"));
        for other in self.rows.values_mut() {
            let c = other.coeff(&pivot);
            if !c.is_zero() {
                *other = &*other - &row.scale(&c);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn to_json(&self) -> Json {
        json!({
            "window": {"kmax": self.window.kmax, "dmax": self.window.dmax},
            "dim": self.dim(),
            "pivots": self.pivots().map(|m| m.to_string()).collect::<Vec<_>>(),
            "rows": self.rows().map(Element::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dim {} (k <= {}, |d| <= {})",
            self.dim(),
            self.window.kmax,
            self.window.dmax
        )?;
        for (m, row) in &self.rows {
            writeln!(f, "  [{m}] {row}")?;
        }
        Ok(())
    }
}

/// Closure layers: `layers[n-1]` spans all brackets with `n` leaves.
pub struct Closure {
    pub layers: Vec<Vec<Element>>,
    pub basis: SubspaceBasis,
}

/// Spans all brackets of `A`, `B` with at most `depth` leaves, projected to
/// `window`.
///
/// Right-normed brackets `[x_1, [x_2, ... x_n]]` span each layer. Terms
/// with `k > kmax` are dropped throughout (they form an ideal, so the
/// result is exact modulo it); whole homogeneous elements are dropped once
/// their grade cannot return to the window.
pub fn lie_closure(ctx: &ScalarContext, depth: u32, window: Window) -> Result<SubspaceBasis> {
    Ok(lie_closure_layers(ctx, depth, window)?.basis)
}

pub fn lie_closure_layers(ctx: &ScalarContext, depth: u32, window: Window) -> Result<Closure> {
    ctx.require_torsion("bracket closure")?;
    if depth == 0 {
        return Err(Error::InvalidArgument("closure depth must be >= 1".into()));
    }
    let gens = [Element::a(ctx), Element::b(ctx)];
    let trunc = |e: &Element| e.filter(|m| m.k <= window.kmax);
    let reach = |e: &Element, left: u32| match e.homogeneous_grade() {
        Some(g) => g.unsigned_abs() <= window.dmax.saturating_add(left),
        None => true,
    };
    let mut basis = SubspaceBasis::new(ctx, window);
    let mut layer: Vec<Element> = gens.to_vec();
    let mut layers = Vec::new();
    for n in 1..=depth {
        for e in &layer {
            basis.insert(e);
        }
        layers.push(layer.clone());
        if n == depth {
            break;
        }
        let candidates: Vec<Element> = layer
            .par_iter()
            .flat_map_iter(|y| gens.iter().map(move |x| (x, y)))
            .map(|(x, y)| x.commutator(y).map(|c| trunc(&c)))
            .collect::<Result<_>>()?;
        // Layer-local echelon basis, unrestricted in grade.
        let wide = Window::new(window.kmax, u32::MAX);
        let mut next = SubspaceBasis::new(ctx, wide);
        for c in candidates.iter().filter(|c| reach(c, depth - n - 1)) {
            next.insert(c);
        }
        layer = next.rows().cloned().collect();
    }
    Ok(Closure { layers, basis })
}

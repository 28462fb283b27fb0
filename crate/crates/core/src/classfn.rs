//! Class functions moved between groups: conjugation, inflation, induction.
//!
//! A class function is stored on a sorted list of class indices (all classes
//! for ordinary characters, the p-regular ones for Brauer characters).

use crate::error::{Error, Result};
use crate::groups::{GroupHandle, Perm, Quotient};
use crate::numbers::Cyclotomic;

/// Class of `h` containing the permutation `x`.
pub fn class_of_perm(h: &GroupHandle, x: &Perm) -> Result<usize> {
    h.index_of(x)
        .map(|i| h.class_of(i))
        .ok_or_else(|| Error::NotASubgroup(format!("{x} is not in the group")))
}

/// φ^y, with φ^y(x) = φ(y x y⁻¹), for `y` normalizing `h`.
pub fn conjugate(h: &GroupHandle, classes: &[usize], values: &[Cyclotomic], y: &Perm) -> Result<Vec<Cyclotomic>> {
    transport(h, classes, values, h, classes, y)
}

/// Moves φ from `from` to `to` = y⁻¹ `from` y: the result takes φ(y x y⁻¹) at x.
pub fn transport(
    from: &GroupHandle,
    from_classes: &[usize],
    values: &[Cyclotomic],
    to: &GroupHandle,
    to_classes: &[usize],
    y: &Perm,
) -> Result<Vec<Cyclotomic>> {
    let yi = y.inverse();
    to_classes
        .iter()
        .map(|&k| {
            let c = class_of_perm(from, &to.classes()[k].rep_perm.conjugate_by(&yi))?;
            let pos = from_classes
                .binary_search(&c)
                .map_err(|_| Error::Internal("conjugation left the class set".into()))?;
            Ok(values[pos].clone())
        })
        .collect()
}

/// Whether φ is fixed by every permutation in `by`.
pub fn is_invariant(h: &GroupHandle, classes: &[usize], values: &[Cyclotomic], by: &[Perm]) -> Result<bool> {
    for y in by {
        if conjugate(h, classes, values, y)? != values {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each class of `h ≤ g`, the class of `hbar ≤ g/N` holding its image.
pub fn quotient_class_map(h: &GroupHandle, g: &GroupHandle, q: &Quotient, hbar: &GroupHandle) -> Result<Vec<usize>> {
    h.classes()
        .iter()
        .map(|c| {
            let x = g
                .index_of(&c.rep_perm)
                .ok_or_else(|| Error::NotASubgroup(format!("{} is not in the group", c.rep_perm)))?;
            class_of_perm(hbar, q.group.element(q.image(x)))
        })
        .collect()
}

/// Inflation along a class map, restricted to the classes listed in `to`.
pub fn inflate(values_all: &[Cyclotomic], map: &[usize], to: &[usize]) -> Vec<Cyclotomic> {
    to.iter().map(|&k| values_all[map[k]].clone()).collect()
}

/// Induction from `t ≤ g` (same points) of a function on the listed classes of `t`.
pub fn induce(
    t: &GroupHandle,
    t_classes: &[usize],
    values: &[Cyclotomic],
    g: &GroupHandle,
    g_classes: &[usize],
) -> Result<Vec<Cyclotomic>> {
    let index = (g.order() / t.order()) as i64;
    g_classes
        .iter()
        .map(|&k| {
            let cls = &g.classes()[k];
            // ψ^G(x) = |G:T|/|K| Σ_{y ∈ K ∩ T} ψ(y)
            let mut acc = Cyclotomic::zero(1);
            for &m in &cls.members {
                if let Some(i) = t.index_of(g.element(m)) {
                    let c = t.class_of(i);
                    let pos = t_classes
                        .binary_search(&c)
                        .map_err(|_| Error::Internal("induction met a class outside the set".into()))?;
                    acc = &acc + &values[pos];
                }
            }
            let scale = num_rational::BigRational::new(index.into(), (cls.size as i64).into());
            Ok(acc.scale(&scale))
        })
        .collect()
}

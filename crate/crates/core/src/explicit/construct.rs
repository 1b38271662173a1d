use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{CayleyGroup, ExplicitError, MAX_ORDER};
use crate::abelian::AbelianGroup;
use crate::numcore::is_prime;

fn check_order(order: u64) -> Result<usize, ExplicitError> {
    if order as u128 > MAX_ORDER as u128 {
        return Err(ExplicitError::TooLarge {
            order: usize::try_from(order).unwrap_or(usize::MAX),
            cap: MAX_ORDER,
        });
    }
    Ok(order as usize)
}

/// `C_k`, element `i` standing for `g^i`.
pub fn cyclic(k: u64) -> Result<CayleyGroup, ExplicitError> {
    if k == 0 {
        return Err(ExplicitError::InvalidParameter(
            "cyclic order must be positive".to_string(),
        ));
    }
    let n = check_order(k)?;
    CayleyGroup::from_rule(n, format!("C{k}"), |a, b| (a + b) % n)
}

/// Dihedral group of the given (even, at least 4) order. Id `f·k + i` is
/// `s^f r^i`, so the rotations come first.
pub fn dihedral(order: u64) -> Result<CayleyGroup, ExplicitError> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(ExplicitError::InvalidParameter(format!(
            "dihedral order must be even and at least 4, got {order}"
        )));
    }
    let n = check_order(order)?;
    let k = n / 2;
    CayleyGroup::from_rule(n, format!("D{order}"), |a, b| {
        let (f1, i1) = (a / k, a % k);
        let (f2, i2) = (b / k, b % k);
        let i1 = if f2 == 1 { (k - i1) % k } else { i1 };
        ((f1 + f2) % 2) * k + (i1 + i2) % k
    })
}

/// Dicyclic group of order `4k` (`k >= 2`): `a` of order `2k`, `x² = a^k`,
/// `x a x⁻¹ = a⁻¹`. Ids `0..2k` are `a^i`, ids `2k + i` are `x a^i`.
/// Order 8 gives the quaternion group.
pub fn dicyclic(order: u64) -> Result<CayleyGroup, ExplicitError> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(ExplicitError::InvalidParameter(format!(
            "dicyclic order must be a multiple of 4 and at least 8, got {order}"
        )));
    }
    let n = check_order(order)?;
    let m = n / 2;
    let k = n / 4;
    CayleyGroup::from_rule(n, format!("Q{order}"), |a, b| {
        let (xa, i) = (a >= m, a % m);
        let (xb, j) = (b >= m, b % m);
        match (xa, xb) {
            (false, false) => (i + j) % m,
            (false, true) => m + (j + m - i) % m,
            (true, false) => m + (i + j) % m,
            (true, true) => (k + j + m - i) % m,
        }
    })
}

/// Table for an abelian group in primary form; ids are mixed-radix digits
/// over the cyclic factors, first factor most significant.
pub fn from_abelian(a: &AbelianGroup) -> Result<CayleyGroup, ExplicitError> {
    let radices = a.primary_factors();
    let order = radices
        .iter()
        .try_fold(1u64, |acc, &r| acc.checked_mul(r))
        .unwrap_or(u64::MAX);
    let n = check_order(order)?;
    let radices: Vec<usize> = radices.into_iter().map(|r| r as usize).collect();
    CayleyGroup::from_rule(n, a.to_string(), |x, y| {
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut place = 1;
        for &r in radices.iter().rev() {
            out += ((x % r + y % r) % r) * place;
            x /= r;
            y /= r;
            place *= r;
        }
        out
    })
}

/// `C_p^k`.
pub fn elementary_abelian(p: u64, k: u32) -> Result<CayleyGroup, ExplicitError> {
    let a = AbelianGroup::elementary(p, k)
        .map_err(|e| ExplicitError::InvalidParameter(e.to_string()))?;
    from_abelian(&a)
}

/// `G × H` with `(g, h)` stored as `g·|H| + h`. In particular `{1} × H`
/// keeps the ids of `H`.
pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> Result<CayleyGroup, ExplicitError> {
    let m = h.order();
    let n = check_order(g.order() as u64 * m as u64)?;
    CayleyGroup::from_rule(n, format!("{} x {}", g.label(), h.label()), |a, b| {
        g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
    })
}

/// Unitriangular 3x3 matrices over `F_p`, order `p³`. Id `a·p² + b·p + c`
/// for the matrix with entries `a, b` above the diagonal and `c` in the
/// corner.
pub fn heisenberg(p: u64) -> Result<CayleyGroup, ExplicitError> {
    if !is_prime(p) {
        return Err(ExplicitError::InvalidParameter(format!("{p} is not prime")));
    }
    let n = check_order(p.saturating_mul(p).saturating_mul(p))?;
    let p = p as usize;
    CayleyGroup::from_rule(n, format!("Heis({p})"), |x, y| {
        let (a1, b1, c1) = (x / (p * p), (x / p) % p, x % p);
        let (a2, b2, c2) = (y / (p * p), (y / p) % p, y % p);
        let a = (a1 + a2) % p;
        let b = (b1 + b2) % p;
        let c = (c1 + c2 + a1 * b2) % p;
        a * p * p + b * p + c
    })
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{hermite_normal_form, smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::permgroup::AbelianStructure;

/// An integer solution of `a · x = b`, if one exists.
///
/// Square triangular matrices with positive diagonal (tables of marks in either
/// orientation) are solved by substitution; everything else goes through the
/// Smith normal form.
pub fn solve_integral(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.len() != a.rows() {
        return None;
    }
    let positive_diagonal = a.is_square() && (0..a.rows()).all(|i| a[(i, i)].is_positive());
    if positive_diagonal && a.is_lower_triangular() {
        return forward_substitute(a, b);
    }
    if positive_diagonal && a.is_upper_triangular() {
        return back_substitute(a, b);
    }
    solve_by_smith(a, b)
}

fn forward_substitute(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = a.rows();
    let mut x: Vec<BigInt> = Vec::with_capacity(n);
    for i in 0..n {
        let s: BigInt = (0..i).map(|j| &a[(i, j)] * &x[j]).sum();
        let (q, r) = (&b[i] - s).div_rem(&a[(i, i)]);
        if !r.is_zero() {
            return None;
        }
        x.push(q);
    }
    Some(x)
}

fn back_substitute(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = a.rows();
    let mut x = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let s: BigInt = (i + 1..n).map(|j| &a[(i, j)] * &x[j]).sum();
        let (q, r) = (&b[i] - s).div_rem(&a[(i, i)]);
        if !r.is_zero() {
            return None;
        }
        x[i] = q;
    }
    Some(x)
}

fn solve_by_smith(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    // u a v = d, so d (v⁻¹ x) = u b
    let s = smith_normal_form(a);
    let ub = s.u.mul_vec(b).ok()?;
    let mut z = vec![BigInt::zero(); a.cols()];
    for (i, y) in ub.iter().enumerate() {
        let d = if i < a.cols() { &s.d[(i, i)] } else { &BigInt::zero().clone() };
        if d.is_zero() {
            if !y.is_zero() {
                return None;
            }
        } else {
            let (q, r) = y.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        }
    }
    s.v.mul_vec(&z).ok()
}

/// A basis (in Hermite normal form) of the integer kernel `{x : a · x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    if a.rows() == 0 {
        return (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
            .collect();
    }
    let s = smith_normal_form(a);
    let rank = s.rank();
    if rank == n {
        return Vec::new();
    }
    let mut gens = IntMatrix::zeros(n - rank, n);
    for (k, j) in (rank..n).enumerate() {
        for i in 0..n {
            gens[(k, i)] = s.v[(i, j)].clone();
        }
    }
    hermite_normal_form(&gens).basis()
}

/// Solves a system of congruences over a finite abelian group.
///
/// The unknown `x_j` ranges over `Z/orders[j]`; row `i` of `a` is read as the
/// functional `x ↦ Σ_j a_ij x_j` into `Z/row_moduli[i]`. Returns the subgroup of
/// solutions as invariant factors together with one generator tuple per factor,
/// each entry reduced into `[0, orders[j])`.
pub fn kernel_mod_orders(
    a: &IntMatrix,
    row_moduli: &[u64],
    orders: &[u64],
) -> Result<AbelianStructure<Vec<u64>>> {
    let n = orders.len();
    let k = a.rows();
    if a.cols() != n || row_moduli.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with {} row moduli and {} unknown orders",
            k,
            a.cols(),
            row_moduli.len(),
            n
        )));
    }
    if orders.iter().chain(row_moduli).any(|&o| o == 0) {
        return Err(Error::DimensionMismatch("moduli must be positive".into()));
    }
    for i in 0..k {
        for j in 0..n {
            let v = &a[(i, j)] * BigInt::from(orders[j]);
            if !v.is_multiple_of(&BigInt::from(row_moduli[i])) {
                return Err(Error::NotWellDefined(format!(
                    "row {i}, unknown {j}: coefficient {} times order {} is not divisible by modulus {}",
                    a[(i, j)], orders[j], row_moduli[i]
                )));
            }
        }
    }
    if n == 0 {
        return Ok(AbelianStructure::trivial());
    }

    // lattice of integer lifts: {x : a x ≡ 0 mod m} = projection of ker [a | -diag(m)]
    let mut lift_gens: Vec<Vec<BigInt>> = Vec::new();
    if k == 0 {
        lift_gens = integer_kernel(&IntMatrix::zeros(0, n));
    } else {
        let mut stacked = IntMatrix::zeros(k, n + k);
        for i in 0..k {
            for j in 0..n {
                stacked[(i, j)] = a[(i, j)].clone();
            }
            stacked[(i, n + i)] = -BigInt::from(row_moduli[i]);
        }
        for v in integer_kernel(&stacked) {
            lift_gens.push(v[..n].to_vec());
        }
    }
    for (j, &o) in orders.iter().enumerate() {
        let mut v = vec![BigInt::zero(); n];
        v[j] = BigInt::from(o);
        lift_gens.push(v);
    }
    let mut gens_matrix = IntMatrix::zeros(lift_gens.len(), n);
    for (i, v) in lift_gens.iter().enumerate() {
        for j in 0..n {
            gens_matrix[(i, j)] = v[j].clone();
        }
    }
    let basis = hermite_normal_form(&gens_matrix).basis();
    debug_assert_eq!(basis.len(), n);
    let mut b = IntMatrix::zeros(n, n);
    for (i, row) in basis.iter().enumerate() {
        for j in 0..n {
            b[(i, j)] = row[j].clone();
        }
    }

    // relations o_j e_j written in the basis b: c · b = diag(orders)
    let bt = b.transpose();
    let mut c = IntMatrix::zeros(n, n);
    for j in 0..n {
        let mut target = vec![BigInt::zero(); n];
        target[j] = BigInt::from(orders[j]);
        let row = solve_integral(&bt, &target).ok_or_else(|| {
            Error::Inconsistent("relation lattice not contained in solution lattice".into())
        })?;
        for (i, x) in row.into_iter().enumerate() {
            c[(j, i)] = x;
        }
    }

    // solutions / relations ≅ Z^n / rows(c); generators e_k v⁻¹ expressed through b
    let s = smith_normal_form(&c);
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    for t in 0..n {
        let d = &s.d[(t, t)];
        if d.is_one() {
            continue;
        }
        let d = d
            .to_u64()
            .ok_or_else(|| Error::Inconsistent("infinite or oversized invariant factor".into()))?;
        let coeffs: Vec<BigInt> = (0..n).map(|i| s.v_inv[(t, i)].clone()).collect();
        let gen: Vec<u64> = (0..n)
            .map(|j| {
                let x: BigInt = (0..n).map(|i| &coeffs[i] * &b[(i, j)]).sum();
                x.mod_floor(&BigInt::from(orders[j])).to_u64().unwrap()
            })
            .collect();
        factors.push(d);
        generators.push(gen);
    }
    Ok(AbelianStructure {
        invariant_factors: factors,
        generators,
    })
}

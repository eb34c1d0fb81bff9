//! The three counting families for p-ary trees on `[n]`:
//!
//! * `y(n,k)`: trees made of a decreasing tree on `k` vertices plus `n - k`
//!   increasing leaves, computed by a recursion on the position of vertex 1;
//! * `f(n,k)`: unordered forests of `k` trees, in closed form;
//! * `t(n,k)`: trees whose maximal decreasing subtree has `k` vertices,
//!   summed over the size `m` of the MD subtree plus its increasing leaves.
//!
//! All values are exact. Tables are filled bottom-up over `n` and never
//! rewritten, so a filled [`Counter`] can be shared read-only.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, check_arity, decreasing_count, factorial, falling, labeled_tree_count, Nat,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Y,
    F,
    T,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Y => "y",
            Family::F => "f",
            Family::T => "t",
        })
    }
}

/// Memoized triangle `n -> [value(n, 0), ..., value(n, n)]` for one family
/// and arity.
#[derive(Debug, Clone)]
pub struct CountTable {
    family: Family,
    arity: u32,
    rows: Vec<Vec<Nat>>,
}

impl CountTable {
    fn new(family: Family, arity: u32) -> Self {
        CountTable {
            family,
            arity,
            rows: Vec::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Number of rows filled so far (rows `0..filled`).
    pub fn filled(&self) -> usize {
        self.rows.len()
    }

    /// Stored value, or `None` when `(n, k)` lies outside the filled triangle.
    pub fn get(&self, n: usize, k: usize) -> Option<&Nat> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    pub fn row(&self, n: usize) -> Option<&[Nat]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    fn push_row(&mut self, row: Vec<Nat>) {
        debug_assert_eq!(row.len(), self.rows.len() + 1);
        self.rows.push(row);
    }
}

/// Memoizing evaluator for all three families at a fixed arity.
#[derive(Debug, Clone)]
pub struct Counter {
    arity: u32,
    y: CountTable,
    f: CountTable,
    t: CountTable,
}

impl Counter {
    pub fn new(p: u32) -> Result<Self> {
        check_arity(p)?;
        Ok(Counter {
            arity: p,
            y: CountTable::new(Family::Y, p),
            f: CountTable::new(Family::F, p),
            t: CountTable::new(Family::T, p),
        })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn table(&self, family: Family) -> &CountTable {
        match family {
            Family::Y => &self.y,
            Family::F => &self.f,
            Family::T => &self.t,
        }
    }

    pub fn get(&mut self, family: Family, n: i64, k: i64) -> Result<Nat> {
        match family {
            Family::Y => self.y(n, k),
            Family::F => self.f(n, k),
            Family::T => self.t(n, k),
        }
    }

    /// Row `n` of a family, `k = 0..=n`.
    pub fn row(&mut self, family: Family, n: usize) -> Result<Vec<Nat>> {
        let table = match family {
            Family::Y => {
                self.fill_y(n)?;
                &self.y
            }
            Family::F => {
                self.fill_f(n)?;
                &self.f
            }
            Family::T => {
                self.fill_t(n)?;
                &self.t
            }
        };
        Ok(table.rows[n].clone())
    }

    pub fn y(&mut self, n: i64, k: i64) -> Result<Nat> {
        if n < 0 || k < 0 || k > n {
            return Ok(Nat::zero());
        }
        self.fill_y(n as usize)?;
        Ok(self.y.rows[n as usize][k as usize].clone())
    }

    pub fn f(&mut self, n: i64, k: i64) -> Result<Nat> {
        if n < 0 || k < 0 || k > n {
            return Ok(Nat::zero());
        }
        self.fill_f(n as usize)?;
        Ok(self.f.rows[n as usize][k as usize].clone())
    }

    pub fn t(&mut self, n: i64, k: i64) -> Result<Nat> {
        if n < 0 || k < 0 || k > n {
            return Ok(Nat::zero());
        }
        self.fill_t(n as usize)?;
        Ok(self.t.rows[n as usize][k as usize].clone())
    }

    /// `{k -> t(n,k)}` for `0 <= k <= n`, checked against `n! C_n^(p)`.
    pub fn t_row(&mut self, n: usize) -> Result<BTreeMap<usize, Nat>> {
        let row = self.row(Family::T, n)?;
        let sum: Nat = row.iter().sum();
        let expected = labeled_tree_count(self.arity, n as u64)?;
        if sum != expected {
            return Err(Error::RowSumMismatch {
                p: self.arity,
                n: n as i64,
                got: sum.to_string(),
                expected: expected.to_string(),
            });
        }
        Ok(row.into_iter().enumerate().collect())
    }

    fn fill_y(&mut self, n: usize) -> Result<()> {
        while self.y.filled() <= n {
            let m = self.y.filled();
            let row = (0..=m)
                .map(|k| self.y_entry(m as i64, k as i64))
                .collect::<Result<Vec<_>>>()?;
            self.y.push_row(row);
        }
        Ok(())
    }

    /// Previously filled `y` value, zero outside the triangle.
    fn y_memo(&self, n: i64, k: i64) -> &Nat {
        static ZERO: std::sync::OnceLock<Nat> = std::sync::OnceLock::new();
        if n < 0 || k < 0 || k > n {
            return ZERO.get_or_init(Nat::zero);
        }
        &self.y.rows[n as usize][k as usize]
    }

    /// `y(n,k)` assuming rows `0..n` are filled.
    fn y_entry(&self, n: i64, k: i64) -> Result<Nat> {
        let p = self.arity as i64;
        if n == 0 {
            return Ok(if k == 0 { Nat::one() } else { Nat::zero() });
        }
        if k == 0 || p * k < n - 1 {
            return Ok(Nat::zero());
        }
        if k == n {
            return decreasing_count(self.arity, n as u64);
        }
        // Sum over m, the number of increasing leaves hanging from vertex 1.
        let mut total = BigInt::zero();
        for m in 0..=p {
            let prev = self.y_memo(n - m - 1, k - 1);
            let ways = binomial(n - 1, m) * binomial(p, m) * factorial(m as u64);
            if prev.is_zero() || ways.is_zero() {
                continue;
            }
            let multiplier = (k - 1) * p - n + m + 2;
            if multiplier < 0 {
                return Err(Error::NegativeMultiplier {
                    p: self.arity,
                    n,
                    k,
                    m,
                });
            }
            total += BigInt::from(ways * prev) * multiplier;
        }
        Ok(total
            .to_biguint()
            .expect("sum of nonnegative terms is nonnegative"))
    }

    fn fill_f(&mut self, n: usize) -> Result<()> {
        while self.f.filled() <= n {
            let m = self.f.filled() as i64;
            let row = (0..=m)
                .map(|k| forest_count(self.arity, m, k))
                .collect::<Result<Vec<_>>>()?;
            self.f.push_row(row);
        }
        Ok(())
    }

    fn fill_t(&mut self, n: usize) -> Result<()> {
        self.fill_y(n)?;
        while self.t.filled() <= n {
            let m = self.t.filled() as i64;
            let row = (0..=m)
                .map(|k| self.t_entry(m, k))
                .collect::<Result<Vec<_>>>()?;
            self.t.push_row(row);
        }
        Ok(())
    }

    /// `t(n,k)` assuming `y` rows `0..=n` are filled.
    fn t_entry(&self, n: i64, k: i64) -> Result<Nat> {
        let p = self.arity as i64;
        if n == 0 {
            return Ok(if k == 0 { Nat::one() } else { Nat::zero() });
        }
        if k == 0 {
            return Ok(Nat::zero());
        }
        if k == n {
            return decreasing_count(self.arity, n as u64);
        }
        // m = |MD subtree| + |increasing leaves|; the m = k term vanishes.
        let mut sum = BigRational::zero();
        for m in k + 1..=n {
            let y = self.y_memo(m, k);
            if y.is_zero() {
                continue;
            }
            let rest = falling(p * (n - k), n - m)?;
            let numer = binomial(n, m) * rest * y * (m - k) as u64;
            sum += BigRational::new(BigInt::from(numer), BigInt::from(n - k));
        }
        if !sum.is_integer() || sum.is_negative() {
            return Err(Error::NonIntegerSum {
                p: self.arity,
                n,
                k,
            });
        }
        Ok(sum.to_integer().to_biguint().expect("checked nonnegative"))
    }
}

/// Closed form for the number of unordered forests of `k` p-ary trees
/// on `[n]`.
fn forest_count(p: u32, n: i64, k: i64) -> Result<Nat> {
    check_arity(p)?;
    if n < 0 || k < 0 || k > n {
        return Ok(Nat::zero());
    }
    if k == n {
        return Ok(Nat::one());
    }
    let pn = p as u64 * n as u64;
    let growth = (1..n as u64 - k as u64).fold(Nat::one(), |acc, i| acc * (pn - i));
    Ok(binomial(n, k) * (p as u64 * k as u64) * growth)
}

pub fn count_y(p: u32, n: i64, k: i64) -> Result<Nat> {
    Counter::new(p)?.y(n, k)
}

pub fn count_f(p: u32, n: i64, k: i64) -> Result<Nat> {
    forest_count(p, n, k)
}

pub fn count_t(p: u32, n: i64, k: i64) -> Result<Nat> {
    Counter::new(p)?.t(n, k)
}

pub fn t_row(p: u32, n: usize) -> Result<BTreeMap<usize, Nat>> {
    Counter::new(p)?.t_row(n)
}

/// Rows of a family as machine integers, for tests and small tables.
pub fn row_u64(counter: &mut Counter, family: Family, n: usize) -> Result<Vec<u64>> {
    Ok(counter
        .row(family, n)?
        .iter()
        .map(|v| v.to_u64().expect("value fits in u64"))
        .collect())
}

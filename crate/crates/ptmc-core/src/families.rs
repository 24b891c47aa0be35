//! Published SAC-OCDMA code family formulas and the comparison table.
//!
//! Each family row evaluates cardinality, weight, cross-correlation, and
//! length exactly in integer arithmetic. The MDW length term
//! (8/3)*sin^2(n*pi/3) cycles with period 3 through the exact values
//! 0, 2, 2, so MDW lengths are always integers and no floating point
//! is involved.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Code family identifiers, in comparison-table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Mfh,
    Mdw,
    Zcc,
    Hadamard,
    Ptmc,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Mfh => "MFH",
            Family::Mdw => "MDW",
            Family::Zcc => "ZCC",
            Family::Hadamard => "Hadamard",
            Family::Ptmc => "PTMC",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// A family with its construction parameter resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    /// MFH over GF(Q). Q is treated as a free integer >= 2; prime-power
    /// existence is not enforced.
    Mfh { q: u64 },
    /// MDW supporting n users, n >= 1.
    Mdw { n: u64 },
    /// The 2^m-user zero-cross-correlation family, m >= 1.
    Zcc { m: u32 },
    /// Sylvester Hadamard code of order M >= 2.
    Hadamard { order: u32 },
    /// Pascal-block code with N users at weight W.
    Ptmc { users: u64, weight: u64 },
}

/// Code weight as published: a concrete value, or any even integer (MDW).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    Exact(u64),
    AnyEven,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Exact(w) => write!(f, "{w}"),
            Weight::AnyEven => f.write_str("even"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        match self {
            Weight::Exact(w) => serializer.serialize_u64(*w),
            Weight::AnyEven => serializer.serialize_str("even"),
        }
    }
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Mfh { .. } => Family::Mfh,
            FamilyParams::Mdw { .. } => Family::Mdw,
            FamilyParams::Zcc { .. } => Family::Zcc,
            FamilyParams::Hadamard { .. } => Family::Hadamard,
            FamilyParams::Ptmc { .. } => Family::Ptmc,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            FamilyParams::Mfh { q } => check_min("Q", q, 2),
            FamilyParams::Mdw { n } => check_min("n", n, 1),
            FamilyParams::Zcc { m } => check_min("m", u64::from(m), 1),
            FamilyParams::Hadamard { order } => check_min("M", u64::from(order), 2),
            FamilyParams::Ptmc { users, weight } => {
                if users < 2 {
                    return Err(Error::TooFewUsers { users });
                }
                if weight < 2 {
                    return Err(Error::WeightTooSmall { weight });
                }
                Ok(())
            }
        }
    }

    /// Number of users the family supports at this parameter.
    ///
    /// For Hadamard this is the constructed count 2^M - 1 (the all-ones
    /// row is unusable), not the commonly quoted 2^(M-1).
    pub fn users(&self) -> Result<u64> {
        self.validate()?;
        match *self {
            FamilyParams::Mfh { q } => q.checked_mul(q).ok_or(Error::ArithmeticOverflow),
            FamilyParams::Mdw { n } => Ok(n),
            FamilyParams::Zcc { m } => pow2(u64::from(m)),
            FamilyParams::Hadamard { order } => Ok(pow2(u64::from(order))? - 1),
            FamilyParams::Ptmc { users, .. } => Ok(users),
        }
    }

    /// Published code weight at this parameter.
    pub fn weight(&self) -> Result<Weight> {
        self.validate()?;
        match *self {
            FamilyParams::Mfh { q } => q
                .checked_add(1)
                .map(Weight::Exact)
                .ok_or(Error::ArithmeticOverflow),
            FamilyParams::Mdw { .. } => Ok(Weight::AnyEven),
            FamilyParams::Zcc { m } => Ok(Weight::Exact(pow2(u64::from(m) - 1)?)),
            FamilyParams::Hadamard { order } => Ok(Weight::Exact(pow2(u64::from(order) - 1)?)),
            FamilyParams::Ptmc { weight, .. } => Ok(Weight::Exact(weight)),
        }
    }

    /// Maximum cross-correlation at this parameter.
    pub fn lambda(&self) -> Result<u64> {
        self.validate()?;
        match *self {
            FamilyParams::Mfh { .. } | FamilyParams::Mdw { .. } => Ok(1),
            FamilyParams::Zcc { .. } | FamilyParams::Ptmc { .. } => Ok(0),
            FamilyParams::Hadamard { order } => pow2(u64::from(order) - 2),
        }
    }

    /// Code length at this parameter, evaluated exactly.
    pub fn length(&self) -> Result<u64> {
        self.validate()?;
        match *self {
            FamilyParams::Mfh { q } => q
                .checked_mul(q)
                .and_then(|qq| qq.checked_add(q))
                .ok_or(Error::ArithmeticOverflow),
            FamilyParams::Mdw { n } => n
                .checked_mul(3)
                .and_then(|base| base.checked_add(mdw_sine_term(n)))
                .ok_or(Error::ArithmeticOverflow),
            FamilyParams::Zcc { m } => pow2(u64::from(m)),
            FamilyParams::Hadamard { order } => pow2(u64::from(order)),
            FamilyParams::Ptmc { users, weight } => {
                users.checked_mul(weight).ok_or(Error::ArithmeticOverflow)
            }
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Mfh { q } => write!(f, "Q={q}"),
            FamilyParams::Mdw { n } => write!(f, "n={n}"),
            FamilyParams::Zcc { m } => write!(f, "m={m}"),
            FamilyParams::Hadamard { order } => write!(f, "M={order}"),
            FamilyParams::Ptmc { users, weight } => write!(f, "N={users} W={weight}"),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for FamilyParams {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Code length of a family at given parameters.
pub fn family_length(params: FamilyParams) -> Result<u64> {
    params.length()
}

/// Exact value of (8/3)*sin^2(n*pi/3): zero when 3 divides n, else 2.
fn mdw_sine_term(n: u64) -> u64 {
    if n.is_multiple_of(3) {
        0
    } else {
        2
    }
}

fn pow2(exp: u64) -> Result<u64> {
    if exp >= 64 {
        return Err(Error::ArithmeticOverflow);
    }
    Ok(1u64 << exp)
}

fn check_min(param: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        return Err(Error::FamilyParamTooSmall { param, value, min });
    }
    Ok(())
}

/// One evaluated row of the family comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FamilyRow {
    pub family: Family,
    #[cfg_attr(feature = "serde", serde(rename = "param"))]
    pub params: FamilyParams,
    /// Users the family actually supports at the chosen parameter.
    pub users: u64,
    pub weight: Weight,
    pub lambda: u64,
    pub length: u64,
    pub notes: String,
    pub requested_users: u64,
    pub requested_weight: u64,
}

fn family_row(params: FamilyParams, requested_users: u64, requested_weight: u64) -> Result<FamilyRow> {
    let notes = match params {
        FamilyParams::Hadamard { .. } => String::from(
            "users measured from the construction (2^M - 1); quoted cardinality is 2^(M-1)",
        ),
        _ => String::new(),
    };
    Ok(FamilyRow {
        family: params.family(),
        params,
        users: params.users()?,
        weight: params.weight()?,
        lambda: params.lambda()?,
        length: params.length()?,
        notes,
        requested_users,
        requested_weight,
    })
}

/// Evaluates one row per family for a requested user count and weight.
///
/// The PTMC row uses the request exactly. Every other family picks the
/// smallest parameter whose user count covers the request; the achieved
/// users and weight stay in the row so any mismatch is visible.
pub fn compare_table(users: u64, weight: u64) -> Result<Vec<FamilyRow>> {
    if users < 2 {
        return Err(Error::TooFewUsers { users });
    }
    if weight < 2 {
        return Err(Error::WeightTooSmall { weight });
    }

    let mfh = FamilyParams::Mfh {
        q: smallest_q_covering(users)?,
    };
    let mdw = FamilyParams::Mdw { n: users };
    let zcc = FamilyParams::Zcc {
        m: smallest_exponent(users, 1, |count| count)?,
    };
    let hadamard = FamilyParams::Hadamard {
        order: smallest_exponent(users, 2, |count| count - 1)?,
    };
    let ptmc = FamilyParams::Ptmc { users, weight };

    let mut rows = Vec::with_capacity(5);
    for params in [mfh, mdw, zcc, hadamard, ptmc] {
        rows.push(family_row(params, users, weight)?);
    }
    Ok(rows)
}

/// Smallest Q >= 2 with Q^2 >= users.
fn smallest_q_covering(users: u64) -> Result<u64> {
    let root = users.isqrt();
    let q = if root * root >= users { root } else { root + 1 };
    Ok(q.max(2))
}

/// Smallest exponent e >= `min` whose family supports at least `users`,
/// where the family supports `f(2^e)` users.
fn smallest_exponent(users: u64, min: u32, f: impl Fn(u64) -> u64) -> Result<u32> {
    (min..64)
        .find(|&e| f(1u64 << e) >= users)
        .ok_or(Error::ArithmeticOverflow)
}

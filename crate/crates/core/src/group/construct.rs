//! Tables for the named families and direct products.

use super::{from_cayley_table_with, FiniteGroup, GroupOptions, GroupSpec, Provenance};
use crate::error::{Error, Result};

pub fn construct_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    construct_group_with(spec, &GroupOptions::default())
}

/// Builds and validates the group described by `spec`.
pub fn construct_group_with(spec: &GroupSpec, opts: &GroupOptions) -> Result<FiniteGroup> {
    spec.validate()?;
    match spec.order() {
        Some(order) if order > opts.order_cap as u64 => {
            return Err(Error::OrderTooLarge {
                order,
                cap: opts.order_cap,
            })
        }
        None if !matches!(spec, GroupSpec::CayleyFile(_) | GroupSpec::DirectProduct(_)) => {
            return Err(Error::OrderTooLarge {
                order: u64::MAX,
                cap: opts.order_cap,
            })
        }
        _ => {}
    }
    let (order, mul) = raw_table(spec, opts)?;
    FiniteGroup::from_table(order, mul, Provenance::Spec(spec.clone()), opts)
}

type RawTable = (usize, Vec<u32>);

fn raw_table(spec: &GroupSpec, opts: &GroupOptions) -> Result<RawTable> {
    Ok(match *spec {
        GroupSpec::Cyclic(n) => {
            let n = n as usize;
            tabulate(n, |a, b| (a + b) % n)
        }
        GroupSpec::Quaternion(k) => quaternion(k),
        GroupSpec::Dihedral(n) => dihedral(n as usize),
        GroupSpec::ElementaryAbelian { p, rank } => {
            let p = p as usize;
            let order = p.pow(rank);
            tabulate(order, |a, b| {
                let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
                for _ in 0..rank {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            })
        }
        GroupSpec::Heisenberg(p) => heisenberg(p as usize),
        GroupSpec::CayleyFile(ref path) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            let g = from_cayley_table_with(&text, opts)?;
            (g.order(), g.table().to_vec())
        }
        GroupSpec::DirectProduct(ref factors) => {
            let mut acc: RawTable = (1, vec![0]);
            for f in factors {
                let next = raw_table(f, opts)?;
                let order = acc.0 as u64 * next.0 as u64;
                if order > opts.order_cap as u64 {
                    return Err(Error::OrderTooLarge {
                        order,
                        cap: opts.order_cap,
                    });
                }
                acc = product(&acc, &next);
            }
            acc
        }
    })
}

fn tabulate(order: usize, f: impl Fn(usize, usize) -> usize) -> RawTable {
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            mul.push(f(a, b) as u32);
        }
    }
    (order, mul)
}

/// Elements `x^a y^b` at index `a + 2^{k-1} b`, with `x` of order `2^{k-1}`,
/// `y^2 = x^{2^{k-2}}` and `y x y^{-1} = x^{-1}`.
fn quaternion(k: u32) -> RawTable {
    let n = 1usize << (k - 1);
    let half = n / 2;
    tabulate(2 * n, |u, v| {
        let (a, b) = (u % n, u / n);
        let (c, d) = (v % n, v / n);
        // y^b x^c = x^{(-1)^b c} y^b
        let c = if b == 1 { (n - c) % n } else { c };
        let mut e = (a + c) % n;
        let mut f = b + d;
        if f == 2 {
            e = (e + half) % n;
            f = 0;
        }
        e + n * f
    })
}

/// Elements `r^a s^b` at index `a + n b`, with `s r s^{-1} = r^{-1}`, `s^2 = e`.
fn dihedral(n: usize) -> RawTable {
    tabulate(2 * n, |u, v| {
        let (a, b) = (u % n, u / n);
        let (c, d) = (v % n, v / n);
        let c = if b == 1 { (n - c) % n } else { c };
        (a + c) % n + n * ((b + d) % 2)
    })
}

/// Triples `(a, b, c)` for the matrix [[1,a,c],[0,1,b],[0,0,1]], index `a + p b + p^2 c`.
fn heisenberg(p: usize) -> RawTable {
    tabulate(p * p * p, |u, v| {
        let (a1, b1, c1) = (u % p, (u / p) % p, u / (p * p));
        let (a2, b2, c2) = (v % p, (v / p) % p, v / (p * p));
        let a = (a1 + a2) % p;
        let b = (b1 + b2) % p;
        let c = (c1 + c2 + a1 * b2) % p;
        a + p * b + p * p * c
    })
}

/// Componentwise product; index `i * |H| + j` for `(g_i, h_j)`.
fn product(g: &RawTable, h: &RawTable) -> RawTable {
    let (ng, nh) = (g.0, h.0);
    tabulate(ng * nh, |u, v| {
        let (g1, h1) = (u / nh, u % nh);
        let (g2, h2) = (v / nh, v % nh);
        g.1[g1 * ng + g2] as usize * nh + h.1[h1 * nh + h2] as usize
    })
}

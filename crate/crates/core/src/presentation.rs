//! Plain-text presentation of `K(p, r)` for external algebra systems.
//!
//! Format, one item per line:
//!
//! ```text
//! # comment lines start with '#'
//! generators: y x0 x1 ...
//! orders: 3 9 9 ...
//! relations:
//! <word> = <word>
//! ```
//!
//! Words are `*`-separated factors `g` or `g^k` with `k` a nonzero integer
//! other than 1; `e` is the identity and `[a,b]` is `a^-1*b^-1*a*b`. Factors
//! of order 1 are left out everywhere and listed in a comment. Exponents in
//! the twisted relation are the binomial exponents reduced into `(-o, o)`
//! keeping their sign, where `o` is the order of that generator. The output
//! is a pure function of `(p, r)`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::constructions::EasterfieldSpec;
use crate::Result;

fn factor(label: &str, exponent: i64) -> Option<String> {
    match exponent {
        0 => None,
        1 => Some(label.to_string()),
        k => Some(format!("{label}^{k}")),
    }
}

fn word(factors: impl IntoIterator<Item = Option<String>>) -> String {
    let parts: Vec<String> = factors.into_iter().flatten().collect();
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join("*")
    }
}

/// Renders the presentation of `K(p, r)`.
pub fn presentation(spec: &EasterfieldSpec) -> Result<String> {
    let p = spec.p() as usize;
    let orders = spec.factor_orders()?;
    let labels: Vec<String> = (0..p).map(|i| format!("x{i}")).collect();
    let live: Vec<usize> = (0..p).filter(|&i| orders[i] > 1).collect();
    // trivial coordinates contribute nothing to any word
    let exp = |i: usize, e: i64| if orders[i] > 1 { e } else { 0 };

    let mut out = String::new();
    writeln!(
        out,
        "# K(p={}, r={}) = H x| <y>, y^-1*h*y = alpha(h), [a,b] = a^-1*b^-1*a*b",
        spec.p(),
        spec.r()
    )
    .unwrap();
    for i in (0..p).filter(|&i| orders[i] == 1) {
        writeln!(out, "# {} has order 1 and is omitted", labels[i]).unwrap();
    }
    let names: Vec<&str> = std::iter::once("y")
        .chain(live.iter().map(|&i| labels[i].as_str()))
        .collect();
    writeln!(out, "generators: {}", names.join(" ")).unwrap();
    let order_list: Vec<String> = std::iter::once(spec.p())
        .chain(live.iter().map(|&i| orders[i]))
        .map(|o| o.to_string())
        .collect();
    writeln!(out, "orders: {}", order_list.join(" ")).unwrap();
    writeln!(out, "relations:").unwrap();

    writeln!(out, "y^{} = e", spec.p()).unwrap();
    for &i in &live {
        writeln!(out, "{}^{} = e", labels[i], orders[i]).unwrap();
    }
    for (n, &i) in live.iter().enumerate() {
        for &j in &live[n + 1..] {
            writeln!(out, "[{},{}] = e", labels[i], labels[j]).unwrap();
        }
    }
    for &i in live.iter().filter(|&&i| i + 1 < p) {
        let rhs = word([factor(&labels[i], 1), factor(&labels[i + 1], exp(i + 1, 1))]);
        writeln!(out, "y^-1*{}*y = {}", labels[i], rhs).unwrap();
    }
    let last = p - 1;
    if orders[last] > 1 {
        let rhs = word(spec.twisted_column().iter().enumerate().map(|(k, value)| {
            let reduced: BigInt = value % BigInt::from(orders[k]);
            let reduced = if reduced.is_zero() {
                0
            } else {
                reduced.to_i64().unwrap()
            };
            factor(&labels[k], exp(k, reduced))
        }));
        writeln!(out, "y^-1*{}*y = {}", labels[last], rhs).unwrap();
    }
    Ok(out)
}

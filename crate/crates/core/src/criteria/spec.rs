//! Criterion configuration and its plain-text form.
//!
//! ```text
//! # comment
//! name = example1
//! form = 3 2 5
//! d_hat = 14
//! l_poly = 1 -1 0 1 1
//! galois_order = 4
//! special_primes = 2:2 7:2
//! symbol_arg = -14
//! g_domain = negative
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::{Form, Int};

/// Values of `g` a criterion is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GDomain {
    Negative,
    Positive,
    Nonzero,
}

impl GDomain {
    pub fn contains(&self, g: &Int) -> bool {
        match self {
            GDomain::Negative => g.is_negative(),
            GDomain::Positive => g.is_positive(),
            GDomain::Nonzero => !g.is_zero(),
        }
    }
}

impl fmt::Display for GDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GDomain::Negative => "negative",
            GDomain::Positive => "positive",
            GDomain::Nonzero => "nonzero",
        })
    }
}

/// Ring class field data for the family `ax² + bxy + cy² + g = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionSpec {
    pub name: String,
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d_hat: Int,
    /// Leading coefficient first.
    pub l_poly: Vec<Int>,
    pub galois_order: u32,
    /// `(q, r)`: a ramified prime `q` contributes the `r·v_q(n̂)`-th power of
    /// a fixed generator of the cyclic Galois group.
    pub special_primes: Vec<(Int, u32)>,
    /// `p` is inert in `E` iff `(symbol_arg / p) = −1`.
    pub symbol_arg: Int,
    pub g_domain: GDomain,
}

const KEYS: [&str; 8] = ["name", "form", "d_hat", "l_poly", "galois_order", "special_primes", "symbol_arg", "g_domain"];

fn ints(s: &str) -> impl Iterator<Item = std::result::Result<Int, String>> + '_ {
    s.split_whitespace().map(|w| Int::from_str(w).map_err(|_| format!("not an integer: {w}")))
}

impl CriterionSpec {
    /// `3x² + 2xy + 5y² + g = 0`, `g < 0`.
    pub fn example1() -> Self {
        let i = Int::from;
        CriterionSpec {
            name: "example1".into(),
            a: i(3),
            b: i(2),
            c: i(5),
            d_hat: i(14),
            l_poly: [1, -1, 0, 1, 1].into_iter().map(i).collect(),
            galois_order: 4,
            special_primes: vec![(i(2), 2), (i(7), 2)],
            symbol_arg: i(-14),
            g_domain: GDomain::Negative,
        }
    }

    /// `5x² + 14xy − 6y² + g = 0`, `g ≠ 0`.
    pub fn example2() -> Self {
        let i = Int::from;
        CriterionSpec {
            name: "example2".into(),
            a: i(5),
            b: i(14),
            c: i(-6),
            d_hat: i(-79),
            l_poly: [1, -1, -4, 2].into_iter().map(i).collect(),
            galois_order: 3,
            special_primes: vec![(i(2), 0), (i(79), 0)],
            symbol_arg: i(79),
            g_domain: GDomain::Nonzero,
        }
    }

    pub fn is_special(&self, p: &Int) -> bool {
        self.special_primes.iter().any(|(q, _)| q == p)
    }

    pub fn role(&self, p: &Int) -> Option<u32> {
        self.special_primes.iter().find(|(q, _)| q == p).map(|(_, r)| *r)
    }

    /// Member of the family with constant term `g`.
    pub fn form(&self, g: &Int) -> Result<Form> {
        if !self.g_domain.contains(g) {
            return Err(Error::domain(format!("{} needs {} g, got {g}", self.name, self.g_domain)));
        }
        Form::new(self.a.clone(), self.b.clone(), self.c.clone(), g.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut seen: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) =
                body.split_once('=').ok_or_else(|| Error::Config { line, msg: "expected key = value".into() })?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(Error::Config { line, msg: format!("unknown key {key}") });
            }
            if seen.insert(key, (line, value.trim())).is_some() {
                return Err(Error::Config { line, msg: format!("duplicate key {key}") });
            }
        }
        let get = |key: &str| -> Result<(usize, &str)> {
            seen.get(key).copied().ok_or_else(|| Error::Config { line: 0, msg: format!("missing key {key}") })
        };
        let at = |line: usize| move |msg: String| Error::Config { line, msg };
        let one_int = |key: &str| -> Result<Int> {
            let (line, v) = get(key)?;
            Int::from_str(v).map_err(|_| Error::Config { line, msg: format!("{key}: not an integer: {v}") })
        };

        let (line, name) = get("name")?;
        if name.is_empty() {
            return Err(Error::Config { line, msg: "name is empty".into() });
        }
        let (line, v) = get("form")?;
        let abc = ints(v).collect::<std::result::Result<Vec<_>, _>>().map_err(at(line))?;
        let [a, b, c]: [Int; 3] =
            abc.try_into().map_err(|_| Error::Config { line, msg: "form needs exactly a b c".into() })?;
        let d_hat = one_int("d_hat")?;
        let (line, v) = get("l_poly")?;
        let l_poly = ints(v).collect::<std::result::Result<Vec<_>, _>>().map_err(at(line))?;
        let (line, v) = get("galois_order")?;
        let galois_order =
            v.parse::<u32>().map_err(|_| Error::Config { line, msg: format!("bad galois_order {v}") })?;
        let (line, v) = get("special_primes")?;
        let mut special_primes = Vec::new();
        for item in v.split_whitespace() {
            let parsed = item.split_once(':').and_then(|(p, r)| Some((Int::from_str(p).ok()?, r.parse::<u32>().ok()?)));
            special_primes
                .push(parsed.ok_or_else(|| Error::Config { line, msg: format!("expected prime:role, got {item}") })?);
        }
        let symbol_arg = one_int("symbol_arg")?;
        let (line, v) = get("g_domain")?;
        let g_domain = match v {
            "negative" => GDomain::Negative,
            "positive" => GDomain::Positive,
            "nonzero" => GDomain::Nonzero,
            _ => {
                return Err(Error::Config {
                    line,
                    msg: format!("g_domain must be negative, positive or nonzero, got {v}"),
                })
            }
        };
        let spec = CriterionSpec {
            name: name.to_string(),
            a,
            b,
            c,
            d_hat,
            l_poly,
            galois_order,
            special_primes,
            symbol_arg,
            g_domain,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Consistency checks shared by parsed and hand-built specs.
    pub fn validate(&self) -> Result<()> {
        let bad = |key: &str, msg: String| Error::Config { line: 0, msg: format!("{key}: {msg}") };
        let form = Form::new(self.a.clone(), self.b.clone(), self.c.clone(), Int::from(1))
            .map_err(|e| bad("form", e.to_string()))?;
        let expected = form.reduce().d_hat;
        if expected != self.d_hat {
            return Err(bad("d_hat", format!("form reduces to {expected}, not {}", self.d_hat)));
        }
        if !matches!(self.galois_order, 1 | 2 | 3 | 4 | 6) {
            return Err(bad("galois_order", format!("{} is not one of 1, 2, 3, 4, 6", self.galois_order)));
        }
        if self.l_poly.first().is_none_or(|c| c.is_zero()) {
            return Err(bad("l_poly", "leading coefficient must be nonzero".into()));
        }
        if self.l_poly.len() != self.galois_order as usize + 1 {
            return Err(bad("l_poly", format!("degree {} differs from galois_order", self.l_poly.len() - 1)));
        }
        if self.symbol_arg.is_zero() {
            return Err(bad("symbol_arg", "must be nonzero".into()));
        }
        for (i, (p, r)) in self.special_primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(bad("special_primes", format!("{p} is not prime")));
            }
            if *r >= self.galois_order {
                return Err(bad("special_primes", format!("role {r} of {p} is not below galois_order")));
            }
            if self.special_primes[..i].iter().any(|(q, _)| q == p) {
                return Err(bad("special_primes", format!("{p} is repeated")));
            }
        }
        let mut ramified = factorize(&self.d_hat)?.primes().cloned().collect::<Vec<_>>();
        ramified.push(Int::from(2));
        if let Some(p) = ramified.iter().find(|p| !self.is_special(p)) {
            return Err(bad("special_primes", format!("ramified prime {p} has no role")));
        }
        Ok(())
    }
}

impl FromStr for CriterionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriterionSpec::parse(s)
    }
}

/// The configuration text, which parses back to the same spec.
impl fmt::Display for CriterionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Int]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "name = {}", self.name)?;
        writeln!(f, "form = {} {} {}", self.a, self.b, self.c)?;
        writeln!(f, "d_hat = {}", self.d_hat)?;
        writeln!(f, "l_poly = {}", join(&self.l_poly))?;
        writeln!(f, "galois_order = {}", self.galois_order)?;
        let sp: Vec<String> = self.special_primes.iter().map(|(p, r)| format!("{p}:{r}")).collect();
        writeln!(f, "special_primes = {}", sp.join(" "))?;
        writeln!(f, "symbol_arg = {}", self.symbol_arg)?;
        writeln!(f, "g_domain = {}", self.g_domain)
    }
}

//! Arithmetic expressions over `r + qA` values.
//!
//! `*` is the product ⊙ and `/` its inverse; `^` takes integer, real or fuzzy
//! exponents. Built-ins: `exp`, `log(z[, n])`, `sqrt`, `root(z, n[, k])`,
//! `conj`, `norm`, `arg`, `re`, `fu`, `polar(modulus, angle)` and
//! `psi_mul(b, c)`. Constants: `A`, `pi`, `e`.

use std::collections::{BTreeSet, HashMap};
use std::f64::consts::{E, PI};

use rfa_core::analytic::{exp_rfa, log_rfa, pow_lc, pow_real, FuzzyMapping};
use rfa_core::{Lc, Mapping, Polar};

use crate::error::{CliError, Result};
use crate::literal::Cursor;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Func {
    Exp,
    Log,
    Sqrt,
    Root,
    Conj,
    Norm,
    Arg,
    Re,
    Fu,
    Polar,
    PsiMul,
}

impl Func {
    fn lookup(name: &str) -> Option<Self> {
        Some(match name {
            "exp" => Self::Exp,
            "log" | "ln" => Self::Log,
            "sqrt" => Self::Sqrt,
            "root" => Self::Root,
            "conj" => Self::Conj,
            "norm" => Self::Norm,
            "arg" => Self::Arg,
            "re" => Self::Re,
            "fu" => Self::Fu,
            "polar" => Self::Polar,
            "psi_mul" => Self::PsiMul,
            _ => return None,
        })
    }

    fn arity(self) -> (usize, usize) {
        match self {
            Self::Log => (1, 2),
            Self::Root => (2, 3),
            Self::Polar | Self::PsiMul => (2, 2),
            _ => (1, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Const(Lc),
    Var(String),
    Neg(Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Call(Func, Vec<Node>),
}

/// Variable values plus the single point of `[A]₁` used by `psi_mul`.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    vars: HashMap<String, Lc>,
    pub psi_core: f64,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_core(psi_core: f64) -> Self {
        Self {
            psi_core,
            ..Self::default()
        }
    }

    pub fn bind(&mut self, name: impl Into<String>, value: Lc) -> &mut Self {
        self.vars.insert(name.into(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<Lc> {
        self.vars.get(name).copied()
    }
}

/// A parsed expression, reusable across evaluations.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    root: Node,
}

pub fn eval_expression(text: &str, bindings: &Bindings) -> Result<Lc> {
    Expr::parse(text)?.eval(bindings)
}

impl Expr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Cursor::new(text);
        let root = sum(&mut c)?;
        if !c.at_end() {
            return Err(c.error("unexpected trailing input"));
        }
        Ok(Self { root })
    }

    pub fn eval(&self, b: &Bindings) -> Result<Lc> {
        eval(&self.root, b)
    }

    /// Names referenced that are not built-in constants.
    pub fn free_vars(&self) -> BTreeSet<String> {
        fn walk(n: &Node, out: &mut BTreeSet<String>) {
            match n {
                Node::Const(_) => {}
                Node::Var(v) => {
                    out.insert(v.clone());
                }
                Node::Neg(x) => walk(x, out),
                Node::Bin(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Node::Call(_, args) => args.iter().for_each(|a| walk(a, out)),
            }
        }
        let mut out = BTreeSet::new();
        walk(&self.root, &mut out);
        out
    }

    /// The expression as a mapping of `var`; every other name must be bound.
    pub fn to_mapping(&self, var: &str, bindings: &Bindings) -> Result<Mapping> {
        if let Some(v) = self
            .free_vars()
            .into_iter()
            .find(|v| v != var && bindings.get(v).is_none())
        {
            return Err(CliError::Unbound(v));
        }
        if !self.free_vars().contains(var) {
            return Ok(FuzzyMapping::constant(self.eval(bindings)?));
        }
        let (root, mut b, var) = (self.root.clone(), bindings.clone(), var.to_string());
        b.vars.remove(&var);
        Ok(FuzzyMapping::try_new(move |z| {
            let mut local = b.clone();
            local.bind(var.clone(), z);
            eval(&root, &local).map_err(|e| match e {
                CliError::DivisionByZero => rfa_core::Error::DivisionByZero,
                CliError::Domain(m) => rfa_core::Error::Domain(m),
                CliError::Numeric(e) => e,
                other => rfa_core::Error::Evaluation(other.to_string()),
            })
        }))
    }
}

fn sum(c: &mut Cursor) -> Result<Node> {
    let mut lhs = product(c)?;
    loop {
        let op = if c.eat('+') {
            BinOp::Add
        } else if c.eat_minus() {
            BinOp::Sub
        } else {
            return Ok(lhs);
        };
        lhs = Node::Bin(op, Box::new(lhs), Box::new(product(c)?));
    }
}

fn product(c: &mut Cursor) -> Result<Node> {
    let mut lhs = unary(c)?;
    loop {
        let op = if c.eat('*') {
            BinOp::Mul
        } else if c.eat('/') {
            BinOp::Div
        } else {
            return Ok(lhs);
        };
        lhs = Node::Bin(op, Box::new(lhs), Box::new(unary(c)?));
    }
}

fn unary(c: &mut Cursor) -> Result<Node> {
    if c.eat_minus() {
        return Ok(Node::Neg(Box::new(unary(c)?)));
    }
    if c.eat('+') {
        return unary(c);
    }
    let base = atom(c)?;
    if c.eat('^') {
        // right-associative, and binds tighter than a leading minus
        return Ok(Node::Bin(BinOp::Pow, Box::new(base), Box::new(unary(c)?)));
    }
    Ok(base)
}

fn atom(c: &mut Cursor) -> Result<Node> {
    c.skip_ws();
    let start = c.pos;
    match c.peek() {
        Some('(') => {
            c.pos += 1;
            let inner = sum(c)?;
            c.expect(')')?;
            Ok(inner)
        }
        Some(ch) if ch.is_ascii_digit() || ch == '.' => {
            Ok(Node::Const(Lc::real(c.unsigned_number()?)))
        }
        Some(_) => {
            let name = c
                .ident()
                .ok_or_else(|| c.error("expected a number, name or `(`"))?;
            if c.eat('(') {
                let f = Func::lookup(name)
                    .ok_or_else(|| CliError::parse(start, format!("unknown function `{name}`")))?;
                let mut args = Vec::new();
                if !c.eat(')') {
                    args.push(sum(c)?);
                    while c.eat(',') {
                        args.push(sum(c)?);
                    }
                    c.expect(')')?;
                }
                let (lo, hi) = f.arity();
                if args.len() < lo || args.len() > hi {
                    return Err(CliError::parse(
                        start,
                        format!("`{name}` takes {lo}..={hi} arguments, got {}", args.len()),
                    ));
                }
                return Ok(Node::Call(f, args));
            }
            Ok(match name {
                "A" => Node::Const(Lc::new(0.0, 1.0)),
                "pi" => Node::Const(Lc::real(PI)),
                "e" => Node::Const(Lc::real(E)),
                _ => Node::Var(name.to_string()),
            })
        }
        None => Err(c.error("unexpected end of input")),
    }
}

fn crisp(z: Lc, what: &str) -> Result<f64> {
    if z.fu == 0.0 {
        Ok(z.re)
    } else {
        Err(CliError::Domain(format!("{what} must be crisp, got {z}")))
    }
}

fn integer(z: Lc, what: &str) -> Result<i64> {
    let v = crisp(z, what)?;
    if v.fract() == 0.0 && v.abs() < 2f64.powi(53) {
        Ok(v as i64)
    } else {
        Err(CliError::Domain(format!(
            "{what} must be an integer, got {v}"
        )))
    }
}

fn power(z: Lc, w: Lc) -> Result<Lc> {
    if w.fu != 0.0 {
        return Ok(pow_lc(z, w, 0)?);
    }
    match integer(w, "exponent") {
        Ok(n) if i32::try_from(n).is_ok() => Ok(z.powi(n as i32)?),
        _ if z.is_zero() && w.re > 0.0 => Ok(Lc::new(0.0, 0.0)),
        _ => Ok(pow_real(z, w.re)?),
    }
}

fn eval(n: &Node, b: &Bindings) -> Result<Lc> {
    Ok(match n {
        Node::Const(z) => *z,
        Node::Var(v) => b.get(v).ok_or_else(|| CliError::Unbound(v.clone()))?,
        Node::Neg(x) => -eval(x, b)?,
        Node::Bin(op, l, r) => {
            let (l, r) = (eval(l, b)?, eval(r, b)?);
            match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l * r,
                BinOp::Div => l.checked_div(r)?,
                BinOp::Pow => power(l, r)?,
            }
        }
        Node::Call(f, args) => {
            let v = args
                .iter()
                .map(|a| eval(a, b))
                .collect::<Result<Vec<_>>>()?;
            match f {
                Func::Exp => exp_rfa(v[0])?,
                Func::Log => {
                    let branch = v.get(1).map(|&k| integer(k, "log branch")).transpose()?;
                    log_rfa(v[0], branch.unwrap_or(0))?
                }
                Func::Sqrt if v[0].is_zero() => v[0],
                Func::Sqrt => v[0].sqrt()?,
                Func::Root => {
                    let n = integer(v[1], "root degree")?;
                    let n = u32::try_from(n).ok().filter(|&n| n > 0).ok_or_else(|| {
                        CliError::Domain(format!("root degree must be positive, got {n}"))
                    })?;
                    let k = v.get(2).map(|&k| integer(k, "root branch")).transpose()?;
                    if v[0].is_zero() {
                        v[0]
                    } else {
                        v[0].nth_root(n, k.unwrap_or(0))?
                    }
                }
                Func::Conj => v[0].conj(),
                Func::Norm => Lc::real(v[0].norm()),
                Func::Arg => Lc::real(v[0].arg()?),
                Func::Re => Lc::real(v[0].re),
                Func::Fu => Lc::real(v[0].fu),
                Func::Polar => {
                    Lc::from_polar(Polar::new(crisp(v[0], "modulus")?, crisp(v[1], "angle")?))
                }
                Func::PsiMul => v[0].psi_mul(v[1], b.psi_core),
            }
        }
    })
}

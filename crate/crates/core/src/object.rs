//! Formal objects of a strongly compact closed category with a second,
//! additive monoidal structure.
//!
//! Only the dual is strict: `(A ⊗ B)* = A* ⊗ B*`, `(A ⊕ B)* = A* ⊕ B*`,
//! `I* = I`, `0* = 0` and `A** = A` hold on normal forms. The monoidal
//! structures themselves are not strictified, so `I ⊗ A` and `A` are
//! different objects mediated by explicit unitors.
//!
//! Textual syntax: `I`, `0`, `Q[2]`, `A*`, `A@B` (tensor), `A+B` (oplus).
//! `*` binds tightest, then `@`, then `+`; both binary operators associate
//! to the left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    Unit,
    Zero,
    /// A generating object. `dual` marks the normal form of `Dual(Gen)`.
    Gen {
        name: String,
        dim: usize,
        dual: bool,
    },
    Dual(Box<Object>),
    Tensor(Box<Object>, Box<Object>),
    Oplus(Box<Object>, Box<Object>),
}

impl Object {
    pub fn gen(name: impl Into<String>, dim: usize) -> Self {
        Object::Gen { name: name.into(), dim, dual: false }
    }

    pub fn dual(&self) -> Self {
        Object::Dual(Box::new(self.clone()))
    }

    pub fn tensor(&self, other: &Object) -> Self {
        Object::Tensor(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn oplus(&self, other: &Object) -> Self {
        Object::Oplus(Box::new(self.clone()), Box::new(other.clone()))
    }

    /// The object `I ⊕ … ⊕ I` with `n` summands, nested to the left.
    /// `n = 0` gives the zero object.
    pub fn copies_of_unit(n: usize) -> Self {
        Object::left_nested_oplus(&vec![Object::Unit; n])
    }

    /// `((A₀ ⊕ A₁) ⊕ A₂) ⊕ …`; the empty list gives `0`.
    pub fn left_nested_oplus(parts: &[Object]) -> Self {
        let mut it = parts.iter();
        match it.next() {
            None => Object::Zero,
            Some(first) => it.fold(first.clone(), |acc, p| acc.oplus(p)),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Object::Unit => 1,
            Object::Zero => 0,
            Object::Gen { dim, .. } => *dim,
            Object::Dual(a) => a.dim(),
            Object::Tensor(a, b) => a.dim() * b.dim(),
            Object::Oplus(a, b) => a.dim() + b.dim(),
        }
    }

    /// Pushes duals inward until they only flag generators.
    pub fn normalize(&self) -> Object {
        match self {
            Object::Unit | Object::Zero | Object::Gen { .. } => self.clone(),
            Object::Tensor(a, b) => a.normalize().tensor(&b.normalize()),
            Object::Oplus(a, b) => a.normalize().oplus(&b.normalize()),
            Object::Dual(inner) => inner.normalize().dual_of_normal(),
        }
    }

    fn dual_of_normal(&self) -> Object {
        match self {
            Object::Unit => Object::Unit,
            Object::Zero => Object::Zero,
            Object::Gen { name, dim, dual } => Object::Gen { name: name.clone(), dim: *dim, dual: !dual },
            Object::Tensor(a, b) => a.dual_of_normal().tensor(&b.dual_of_normal()),
            Object::Oplus(a, b) => a.dual_of_normal().oplus(&b.dual_of_normal()),
            Object::Dual(_) => unreachable!("normal forms carry no Dual nodes"),
        }
    }

    pub fn is_normal(&self) -> bool {
        match self {
            Object::Unit | Object::Zero | Object::Gen { .. } => true,
            Object::Dual(_) => false,
            Object::Tensor(a, b) | Object::Oplus(a, b) => a.is_normal() && b.is_normal(),
        }
    }

    /// Splits a normalized `A ⊗ B` into its factors.
    pub fn as_tensor(&self) -> Option<(&Object, &Object)> {
        match self {
            Object::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_oplus(&self) -> Option<(&Object, &Object)> {
        match self {
            Object::Oplus(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// Structural equality of normal forms.
pub fn obj_equal(a: &Object, b: &Object) -> bool {
    a.normalize() == b.normalize()
}

// Precedence levels for printing: 0 = sum, 1 = tensor, 2 = postfix/atom.
fn write_at(obj: &Object, level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let (own, needs) = match obj {
        Object::Oplus(..) => (0, level > 0),
        Object::Tensor(..) => (1, level > 1),
        _ => (2, false),
    };
    if needs {
        f.write_str("(")?;
    }
    match obj {
        Object::Unit => f.write_str("I")?,
        Object::Zero => f.write_str("0")?,
        Object::Gen { name, dim, dual } => {
            write!(f, "{name}[{dim}]")?;
            if *dual {
                f.write_str("*")?;
            }
        }
        Object::Dual(a) => {
            write_at(a, 2, f)?;
            f.write_str("*")?;
        }
        Object::Tensor(a, b) => {
            write_at(a, own, f)?;
            f.write_str("@")?;
            write_at(b, own + 1, f)?;
        }
        Object::Oplus(a, b) => {
            write_at(a, own, f)?;
            f.write_str("+")?;
            write_at(b, own + 1, f)?;
        }
    }
    if needs {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, f)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn sum(&mut self) -> Result<Object> {
        let mut acc = self.product()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            acc = acc.oplus(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Object> {
        let mut acc = self.postfix()?;
        while self.peek() == Some(b'@') {
            self.pos += 1;
            acc = acc.tensor(&self.postfix()?);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Object> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.dual();
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Object> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Object::Zero)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    let digits_start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii");
                    let dim: usize = digits.parse().map_err(|_| self.err("expected a dimension"))?;
                    if self.peek() != Some(b']') {
                        return Err(self.err("expected `]`"));
                    }
                    self.pos += 1;
                    if dim == 0 {
                        return Err(self.err("generator dimensions must be positive"));
                    }
                    Ok(Object::gen(name, dim))
                } else if name == "I" {
                    Ok(Object::Unit)
                } else {
                    Err(self.err("generator needs a dimension, e.g. Q[2]"))
                }
            }
            _ => Err(self.err("expected an object")),
        }
    }
}

impl FromStr for Object {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let obj = p.sum()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(obj)
    }
}

impl Serialize for Object {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Object {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

//! Canonical text form: `tree := "_" | "(" label ("," tree){p} ")"`,
//! decimal labels, no whitespace.

use std::fmt;
use std::str::FromStr;

use super::{PAryTree, Vertex, VertexId};
use crate::error::{Error, Result};

impl PAryTree {
    pub fn encode(&self) -> String {
        let mut out = String::with_capacity(self.vertices.len() * 8);
        match self.root {
            None => out.push('_'),
            Some(r) => self.encode_at(r, &mut out),
        }
        out
    }

    fn encode_at(&self, v: VertexId, out: &mut String) {
        use fmt::Write;
        let _ = write!(out, "({}", self.vertices[v].label);
        for slot in &self.vertices[v].slots {
            out.push(',');
            match slot {
                None => out.push('_'),
                Some(c) => self.encode_at(*c, out),
            }
        }
        out.push(')');
    }

    /// Parses the canonical form, inferring the arity from the root's slot
    /// count. The bare empty tree `_` carries no arity; use
    /// [`PAryTree::decode_with_arity`] for it.
    pub fn decode(text: &str) -> Result<Self> {
        Parser::new(text, None).parse()
    }

    pub fn decode_with_arity(text: &str, arity: u32) -> Result<Self> {
        let tree = Parser::new(text, Some(arity)).parse()?;
        Ok(tree)
    }
}

impl fmt::Display for PAryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for PAryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PAryTree::decode(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    arity: Option<u32>,
    vertices: Vec<Vertex>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, arity: Option<u32>) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            arity,
            vertices: Vec::new(),
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn parse(mut self) -> Result<PAryTree> {
        let root = self.subtree()?;
        if self.pos != self.bytes.len() {
            return self.err("trailing input");
        }
        let Some(arity) = self.arity else {
            return self.err("cannot infer arity of the empty tree");
        };
        let tree = PAryTree::from_raw(arity, root, self.vertices);
        tree.ensure_valid()?;
        Ok(tree)
    }

    fn subtree(&mut self) -> Result<Option<VertexId>> {
        match self.peek() {
            Some(b'_') => {
                self.pos += 1;
                Ok(None)
            }
            Some(b'(') => {
                self.pos += 1;
                let label = self.label()?;
                let id = self.vertices.len();
                self.vertices.push(Vertex {
                    label,
                    slots: Vec::new(),
                });
                let mut slots = Vec::new();
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    slots.push(self.subtree()?);
                }
                match self.arity {
                    Some(p) if p as usize != slots.len() => {
                        return self.err(format!("expected {p} slots, found {}", slots.len()));
                    }
                    None if slots.len() < 2 => {
                        return self
                            .err(format!("arity must be at least 2, found {}", slots.len()));
                    }
                    None => self.arity = Some(slots.len() as u32),
                    _ => {}
                }
                self.expect(b')')?;
                self.vertices[id].slots = slots;
                Ok(Some(id))
            }
            _ => self.err("expected '(' or '_'"),
        }
    }

    fn label(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a label");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<u32>() {
            Ok(0) => Err(Error::Parse {
                pos: start,
                msg: "labels must be positive".into(),
            }),
            Ok(l) => Ok(l),
            Err(_) => Err(Error::Parse {
                pos: start,
                msg: "label out of range".into(),
            }),
        }
    }
}

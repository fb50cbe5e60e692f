//! Declaration files: one `ring` statement followed by named ideals,
//! derivations, Poisson structures and sections.
//!
//! ```text
//! ring Q[x, y, z]
//! ideal I = { x^2 - y, y*z }
//! derivation D = { x -> y, y -> x, z -> 0 }
//! poisson B = { [x, y] = z, [y, z] = x, [z, x] = y }
//! section S = { x -> 1, y -> 2*x, z -> 0 }
//! ```
//!
//! Statements are recognised by their leading keyword, so line breaks inside
//! a brace list are allowed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::parse::{Cursor, Tok};
use super::{Polynomial, VariableRing};
use crate::error::{Error, Result};

/// Entry `(i, j, p)` with `i < j` meaning `{x_i, x_j} = p`.
pub type BracketEntry = (usize, usize, Polynomial);

#[derive(Clone, Debug)]
pub struct Document {
    pub ring: VariableRing,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
    /// Generator images, indexed like the ring variables.
    pub derivations: BTreeMap<String, Vec<Polynomial>>,
    pub poisson: BTreeMap<String, Vec<BracketEntry>>,
    /// Section values, indexed like the ring variables.
    pub sections: BTreeMap<String, Vec<Polynomial>>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let mut cur = Cursor::new(text)?;
        match cur.peek() {
            Tok::Ident(k) if k == "ring" => {}
            _ => return cur.unexpected("`ring` declaration first"),
        }
        cur.bump();
        match cur.ident()? {
            (q, _) if q == "Q" => {}
            (_, at) => return Err(Error::Syntax { offset: at, message: "only Q is supported as coefficient field".into() }),
        }
        cur.expect(Tok::LBracket)?;
        let mut names = vec![cur.ident()?.0];
        while *cur.peek() == Tok::Comma {
            cur.bump();
            names.push(cur.ident()?.0);
        }
        cur.expect(Tok::RBracket)?;
        let ring = VariableRing::new(&names)?;

        let mut doc = Document {
            ring,
            ideals: BTreeMap::new(),
            derivations: BTreeMap::new(),
            poisson: BTreeMap::new(),
            sections: BTreeMap::new(),
        };
        while !cur.at_eof() {
            let (keyword, at) = cur.ident()?;
            let (name, _) = cur.ident()?;
            if doc.is_declared(&name) {
                return Err(Error::Declaration(format!("`{name}` declared twice")));
            }
            cur.expect(Tok::Eq)?;
            cur.expect(Tok::LBrace)?;
            match keyword.as_str() {
                "ideal" => {
                    let gens = list(&mut cur, |c| c.polynomial(&doc.ring))?;
                    doc.ideals.insert(name, gens);
                }
                "derivation" | "section" => {
                    let pairs = list(&mut cur, |c| {
                        let (v, at) = c.ident()?;
                        c.expect(Tok::Arrow)?;
                        Ok((v, at, c.polynomial(&doc.ring)?))
                    })?;
                    let images = doc.images(&keyword, &name, pairs)?;
                    if keyword == "section" {
                        doc.sections.insert(name, images);
                    } else {
                        doc.derivations.insert(name, images);
                    }
                }
                "poisson" => {
                    let entries = list(&mut cur, |c| {
                        c.expect(Tok::LBracket)?;
                        let a = c.ident()?;
                        c.expect(Tok::Comma)?;
                        let b = c.ident()?;
                        c.expect(Tok::RBracket)?;
                        c.expect(Tok::Eq)?;
                        Ok((a, b, c.polynomial(&doc.ring)?))
                    })?;
                    let entries = doc.bracket_entries(&name, entries)?;
                    doc.poisson.insert(name, entries);
                }
                _ => {
                    return Err(Error::Syntax {
                        offset: at,
                        message: format!("unknown statement `{keyword}`"),
                    })
                }
            }
        }
        Ok(doc)
    }

    fn is_declared(&self, name: &str) -> bool {
        self.ideals.contains_key(name)
            || self.derivations.contains_key(name)
            || self.poisson.contains_key(name)
            || self.sections.contains_key(name)
    }

    fn images(&self, kind: &str, name: &str, pairs: Vec<(String, usize, Polynomial)>) -> Result<Vec<Polynomial>> {
        let n = self.ring.nvars();
        let mut images: Vec<Option<Polynomial>> = vec![None; n];
        for (v, at, p) in pairs {
            let i = self.ring.index_of(&v).ok_or_else(|| Error::Syntax {
                offset: at,
                message: format!("unknown variable `{v}`"),
            })?;
            if images[i].is_some() {
                return Err(Error::Declaration(format!("{kind} {name}: `{v}` has two images")));
            }
            images[i] = Some(p);
        }
        images
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| {
                    Error::Declaration(format!("{kind} {name}: no image for `{}`", self.ring.name(i)))
                })
            })
            .collect()
    }

    fn bracket_entries(
        &self,
        name: &str,
        entries: Vec<((String, usize), (String, usize), Polynomial)>,
    ) -> Result<Vec<BracketEntry>> {
        let mut seen: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
        for ((a, at_a), (b, at_b), p) in entries {
            let i = self.ring.index_of(&a).ok_or_else(|| Error::Syntax { offset: at_a, message: format!("unknown variable `{a}`") })?;
            let j = self.ring.index_of(&b).ok_or_else(|| Error::Syntax { offset: at_b, message: format!("unknown variable `{b}`") })?;
            if i == j {
                return Err(Error::Declaration(format!("poisson {name}: [{a}, {a}] is always 0")));
            }
            let (key, val) = if i < j { ((i, j), p) } else { ((j, i), -p) };
            if seen.insert(key, val).is_some() {
                return Err(Error::Declaration(format!("poisson {name}: pair [{a}, {b}] given twice")));
            }
        }
        Ok(seen.into_iter().map(|((i, j), p)| (i, j, p)).collect())
    }

    pub fn ideal(&self, name: &str) -> Result<&[Polynomial]> {
        self.ideals.get(name).map(|v| v.as_slice()).ok_or_else(|| missing("ideal", name))
    }

    pub fn derivation(&self, name: &str) -> Result<&[Polynomial]> {
        self.derivations.get(name).map(|v| v.as_slice()).ok_or_else(|| missing("derivation", name))
    }

    pub fn structure(&self, name: &str) -> Result<&[BracketEntry]> {
        self.poisson.get(name).map(|v| v.as_slice()).ok_or_else(|| missing("poisson structure", name))
    }

    pub fn section(&self, name: &str) -> Result<&[Polynomial]> {
        self.sections.get(name).map(|v| v.as_slice()).ok_or_else(|| missing("section", name))
    }

    /// Canonical text rendering; parsing it yields an equal document.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "ring Q[{}]", self.ring.names().join(", ")).unwrap();
        for (name, gens) in &self.ideals {
            let body: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            writeln!(s, "ideal {name} = {{ {} }}", body.join(", ")).unwrap();
        }
        let images = |imgs: &[Polynomial]| -> String {
            imgs.iter()
                .enumerate()
                .map(|(i, p)| format!("{} -> {p}", self.ring.name(i)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        for (name, imgs) in &self.derivations {
            writeln!(s, "derivation {name} = {{ {} }}", images(imgs)).unwrap();
        }
        for (name, entries) in &self.poisson {
            let body: Vec<String> = entries
                .iter()
                .map(|(i, j, p)| format!("[{}, {}] = {p}", self.ring.name(*i), self.ring.name(*j)))
                .collect();
            writeln!(s, "poisson {name} = {{ {} }}", body.join(", ")).unwrap();
        }
        for (name, imgs) in &self.sections {
            writeln!(s, "section {name} = {{ {} }}", images(imgs)).unwrap();
        }
        s
    }
}

fn missing(kind: &str, name: &str) -> Error {
    Error::Declaration(format!("no {kind} named `{name}`"))
}

fn list<T>(cur: &mut Cursor, mut item: impl FnMut(&mut Cursor) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    if *cur.peek() == Tok::RBrace {
        cur.bump();
        return Ok(out);
    }
    loop {
        out.push(item(cur)?);
        match cur.peek() {
            Tok::Comma => {
                cur.bump();
            }
            Tok::RBrace => {
                cur.bump();
                return Ok(out);
            }
            _ => return cur.unexpected("`,` or `}`"),
        }
    }
}

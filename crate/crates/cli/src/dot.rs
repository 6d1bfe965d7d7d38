//! Graphviz export of a degree slice with its elementary moves, and a small
//! syntax checker for the DOT subset we emit (and a bit more).

use std::collections::HashSet;
use std::fmt::Write;

use borel_core::ideals::minimal_elements;
use borel_core::monomials::all_terms;
use borel_core::{MonomialIdeal, Result, Term};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per term of `T_t`, one edge `u -> e_j^-(u)` per applicable
/// downward move. Ideal terms are boxed; Borel-minimal ones also filled.
pub fn export_dot(j: &MonomialIdeal, t: u32) -> Result<String> {
    let mut terms = all_terms(j.n(), t);
    terms.sort();
    let inside: Vec<Term> = terms.iter().filter(|u| j.contains(u)).cloned().collect();
    let minimal: HashSet<Term> = if j.is_borel() {
        minimal_elements(&inside)?.into_iter().collect()
    } else {
        HashSet::new()
    };
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&format!("T_{t}"))).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    for u in &terms {
        let mut attrs = Vec::new();
        if j.contains(u) {
            attrs.push("shape=box");
        }
        if minimal.contains(u) {
            attrs.push("style=filled");
        }
        if attrs.is_empty() {
            writeln!(out, "  {};", quote(&u.to_string())).unwrap();
        } else {
            writeln!(out, "  {} [{}];", quote(&u.to_string()), attrs.join(", ")).unwrap();
        }
    }
    for u in &terms {
        for k in 1..=j.n() {
            if let Some(v) = u.move_down(k) {
                writeln!(out, "  {} -> {};", quote(&u.to_string()), quote(&v.to_string())).unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    Sym(&'static str),
}

fn tokenize(src: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '/' && src[i..].starts_with("//") || c == '#' {
            while chars.next_if(|&(_, c)| c != '\n').is_some() {}
        } else if src[i..].starts_with("/*") {
            let end = src[i + 2..].find("*/").ok_or("unterminated comment")?;
            while chars.next_if(|&(k, _)| k < i + 2 + end + 2).is_some() {}
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    None => return Err(format!("unterminated string at {i}")),
                    Some((_, '"')) => break,
                    Some((_, '\\')) => {
                        if let Some((_, e)) = chars.next() {
                            s.push(e);
                        }
                    }
                    Some((_, ch)) => s.push(ch),
                }
            }
            toks.push(Tok::Id(s));
        } else if src[i..].starts_with("->") || src[i..].starts_with("--") {
            chars.next();
            chars.next();
            toks.push(Tok::Sym(if src[i..].starts_with("->") { "->" } else { "--" }));
        } else if let Some(sym) = ["{", "}", "[", "]", ";", ",", "="].into_iter().find(|s| s.starts_with(c)) {
            chars.next();
            toks.push(Tok::Sym(sym));
        } else if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' {
            let mut s = String::new();
            if c == '-' {
                chars.next();
                s.push('-');
            }
            while let Some((_, ch)) = chars.next_if(|&(_, ch)| ch.is_alphanumeric() || ch == '_' || ch == '.') {
                s.push(ch);
            }
            toks.push(Tok::Id(s));
        } else {
            return Err(format!("unexpected character {c:?} at {i}"));
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    directed: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> std::result::Result<(), String> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(format!("expected `{sym}` at token {}", self.pos))
        }
    }

    fn id(&mut self) -> Option<String> {
        match self.peek() {
            Some(Tok::Id(s)) => {
                let s = s.clone();
                self.pos += 1;
                Some(s)
            }
            _ => None,
        }
    }

    fn attr_list(&mut self) -> std::result::Result<(), String> {
        while self.eat("[") {
            while !self.eat("]") {
                self.id().ok_or("expected attribute name")?;
                if self.eat("=") {
                    self.id().ok_or("expected attribute value")?;
                }
                let _ = self.eat(",") || self.eat(";");
            }
        }
        Ok(())
    }

    fn stmt_list(&mut self) -> std::result::Result<(), String> {
        loop {
            if self.eat("}") {
                return Ok(());
            }
            let first = self.id().ok_or_else(|| format!("expected statement at token {}", self.pos))?;
            if self.eat("=") {
                self.id().ok_or("expected value after `=`")?;
            } else if matches!(first.as_str(), "graph" | "node" | "edge") {
                self.attr_list()?;
            } else {
                let edge = if self.directed { "->" } else { "--" };
                while self.eat(edge) {
                    self.id().ok_or("expected edge target")?;
                }
                self.attr_list()?;
            }
            let _ = self.eat(";");
        }
    }
}

/// Checks `[strict] (graph|digraph) [ID] { stmt* }` with node, edge,
/// attribute and `a = b` statements. Subgraphs and ports are not accepted.
pub fn validate_dot(src: &str) -> std::result::Result<(), String> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, directed: false };
    if matches!(p.peek(), Some(Tok::Id(s)) if s == "strict") {
        p.pos += 1;
    }
    match p.id().as_deref() {
        Some("digraph") => p.directed = true,
        Some("graph") => {}
        _ => return Err("expected `graph` or `digraph`".into()),
    }
    if !matches!(p.peek(), Some(Tok::Sym("{"))) {
        p.id().ok_or("expected graph name or `{`")?;
    }
    p.expect("{")?;
    p.stmt_list()?;
    if p.pos != p.toks.len() {
        return Err("trailing tokens after the graph".into());
    }
    Ok(())
}

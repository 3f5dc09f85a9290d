//! The text spec format.
//!
//! ```text
//! # Sweedler's algebra
//! field Q
//! kind hopf
//! basis H: 1 g x gx
//! map mult : H H -> H
//!   g g -> 1 : 1
//!   g x -> gx : 1
//! map unit : k -> H
//!   -> 1 : 1
//! ```
//!
//! Entries read `source labels -> target labels : coefficient`; the ground
//! field `k` contributes no labels. Vectors (for subspaces) are declared with
//! `vector NAME : BASIS` followed by `label : coefficient` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::correspondence::QuotientModuleCoalgebra;
use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, CoalgebraData, HopfAlgebra, Pairing};
use crate::linalg::{flatten, unflatten, Field, LinMap, SVec, Scalar, Subspace};
use crate::rep::{Comodule, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Hopf,
    Coalgebra,
    Comodule,
    Subspace,
    Pairing,
    Quotient,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Hopf => "hopf",
            Kind::Coalgebra => "coalgebra",
            Kind::Comodule => "comodule",
            Kind::Subspace => "subspace",
            Kind::Pairing => "pairing",
            Kind::Quotient => "quotient",
        }
    }

    fn parse(s: &str) -> Option<Kind> {
        [Kind::Hopf, Kind::Coalgebra, Kind::Comodule, Kind::Subspace, Kind::Pairing, Kind::Quotient]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub src: Vec<String>,
    pub dst: Vec<String>,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpec {
    pub name: String,
    /// Basis names of the tensor legs; empty for `k`.
    pub src: Vec<String>,
    pub dst: Vec<String>,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSpec {
    pub name: String,
    pub basis: String,
    pub coeffs: Vec<(String, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub field: Field,
    pub kind: Kind,
    pub bases: Vec<(String, Vec<String>)>,
    pub maps: Vec<MapSpec>,
    pub vectors: Vec<VectorSpec>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(b, t)| (line[..b].chars().count() + 1, t))
        .collect()
}

enum Open {
    None,
    Map(usize),
    Vector(usize),
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile> {
        let mut field = None;
        let mut kind = None;
        let mut bases: Vec<(String, Vec<String>)> = Vec::new();
        let mut maps: Vec<MapSpec> = Vec::new();
        let mut vectors: Vec<VectorSpec> = Vec::new();
        let mut open = Open::None;

        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            let Some(&(col0, head)) = toks.first() else {
                continue;
            };
            match head {
                "field" => {
                    let &(c, v) = toks.get(1).ok_or_else(|| parse_err(ln, col0, "expected field after `field`"))?;
                    field = Some(parse_field(v).map_err(|m| parse_err(ln, c, m))?);
                    open = Open::None;
                }
                "kind" => {
                    let &(c, v) = toks.get(1).ok_or_else(|| parse_err(ln, col0, "expected kind after `kind`"))?;
                    kind = Some(Kind::parse(v).ok_or_else(|| parse_err(ln, c, format!("unknown kind `{v}`")))?);
                    open = Open::None;
                }
                "basis" => {
                    let &(c, name) = toks.get(1).ok_or_else(|| parse_err(ln, col0, "expected basis name"))?;
                    let Some(name) = name.strip_suffix(':') else {
                        return Err(parse_err(ln, c + name.chars().count(), "expected `:` after basis name"));
                    };
                    if name == "k" || name.is_empty() {
                        return Err(parse_err(ln, c, "basis name `k` is reserved"));
                    }
                    if bases.iter().any(|(n, _)| n == name) {
                        return Err(parse_err(ln, c, format!("basis `{name}` declared twice")));
                    }
                    let mut labels: Vec<String> = Vec::new();
                    for &(c, l) in &toks[2..] {
                        if labels.iter().any(|x| x == l) {
                            return Err(parse_err(ln, c, format!("label `{l}` repeated")));
                        }
                        if l == "->" || l.contains(':') {
                            return Err(parse_err(ln, c, format!("invalid label `{l}`")));
                        }
                        labels.push(l.to_string());
                    }
                    if labels.is_empty() {
                        return Err(parse_err(ln, col0, "basis without labels"));
                    }
                    bases.push((name.to_string(), labels));
                    open = Open::None;
                }
                "map" => {
                    let m = parse_map_header(ln, &toks, &bases)?;
                    if maps.iter().any(|x| x.name == m.name) {
                        return Err(parse_err(ln, toks[1].0, format!("map `{}` declared twice", m.name)));
                    }
                    maps.push(m);
                    open = Open::Map(maps.len() - 1);
                }
                "vector" => {
                    let (name, basis) = match toks.as_slice() {
                        [_, (_, n), (_, ":"), (c, b)] => {
                            if !bases.iter().any(|(x, _)| x == b) {
                                return Err(parse_err(ln, *c, format!("undeclared basis `{b}`")));
                            }
                            (n.to_string(), b.to_string())
                        }
                        _ => return Err(parse_err(ln, col0, "expected `vector NAME : BASIS`")),
                    };
                    vectors.push(VectorSpec {
                        name,
                        basis,
                        coeffs: Vec::new(),
                    });
                    open = Open::Vector(vectors.len() - 1);
                }
                _ => {
                    let f = field.ok_or_else(|| parse_err(ln, col0, "`field` must precede entries"))?;
                    match open {
                        Open::None => return Err(parse_err(ln, col0, format!("unexpected `{head}`"))),
                        Open::Map(i) => {
                            let e = parse_entry(ln, &toks, line, f, &maps[i], &bases)?;
                            maps[i].entries.push(e);
                        }
                        Open::Vector(i) => {
                            let labels = basis_labels(&bases, &vectors[i].basis).unwrap_or(&[]);
                            let (c, l) = toks[0];
                            if !labels.iter().any(|x| x == l) {
                                return Err(parse_err(ln, c, format!("unknown label `{l}` in basis {}", vectors[i].basis)));
                            }
                            let coeff = parse_coeff(ln, &toks[1..], line, f)?;
                            vectors[i].coeffs.push((l.to_string(), coeff));
                        }
                    }
                }
            }
        }
        let end = text.lines().count().max(1);
        Ok(SpecFile {
            field: field.ok_or_else(|| parse_err(end, 1, "missing `field` line"))?,
            kind: kind.ok_or_else(|| parse_err(end, 1, "missing `kind` line"))?,
            bases,
            maps,
            vectors,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", field_text(self.field));
        let _ = writeln!(out, "kind {}", self.kind.name());
        for (name, labels) in &self.bases {
            let _ = writeln!(out, "basis {name}: {}", labels.join(" "));
        }
        for m in &self.maps {
            let _ = writeln!(out, "map {} : {} -> {}", m.name, legs_text(&m.src), legs_text(&m.dst));
            for e in &m.entries {
                let _ = writeln!(out, "  {} : {}", arrow_text(&e.src, &e.dst), e.coeff);
            }
        }
        for v in &self.vectors {
            let _ = writeln!(out, "vector {} : {}", v.name, v.basis);
            for (l, c) in &v.coeffs {
                let _ = writeln!(out, "  {l} : {c}");
            }
        }
        out
    }

    /// Order-independent normal form: labels, maps, entries and vector terms
    /// are sorted, duplicate entries summed and zero entries dropped.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", field_text(self.field));
        let _ = writeln!(out, "kind {}", self.kind.name());
        let mut bases = self.bases.clone();
        bases.sort();
        for (name, labels) in &mut bases {
            labels.sort();
            let _ = writeln!(out, "basis {name}: {}", labels.join(" "));
        }
        let mut maps: Vec<&MapSpec> = self.maps.iter().collect();
        maps.sort_by(|a, b| a.name.cmp(&b.name));
        for m in maps {
            let _ = writeln!(out, "map {} : {} -> {}", m.name, legs_text(&m.src), legs_text(&m.dst));
            let mut summed: BTreeMap<String, Scalar> = BTreeMap::new();
            for e in &m.entries {
                let key = arrow_text(&e.src, &e.dst);
                let slot = summed.entry(key).or_insert_with(|| self.field.zero());
                *slot = &*slot + &e.coeff;
            }
            for (k, c) in summed.iter().filter(|(_, c)| !c.is_zero()) {
                let _ = writeln!(out, "  {k} : {c}");
            }
        }
        let mut vectors: Vec<String> = self
            .vectors
            .iter()
            .map(|v| {
                let mut summed: BTreeMap<&str, Scalar> = BTreeMap::new();
                for (l, c) in &v.coeffs {
                    let slot = summed.entry(l).or_insert_with(|| self.field.zero());
                    *slot = &*slot + c;
                }
                let terms: Vec<String> = summed
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| format!("{l}:{c}"))
                    .collect();
                format!("vector {} : {} {}", v.name, v.basis, terms.join(" "))
            })
            .collect();
        vectors.sort();
        for v in vectors {
            let _ = writeln!(out, "{v}");
        }
        out
    }

    /// Hex SHA-256 of [`SpecFile::canonical_text`].
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }

    pub fn basis(&self, name: &str) -> Result<&[String]> {
        basis_labels(&self.bases, name).ok_or_else(|| Error::input(format!("spec declares no basis `{name}`")))
    }

    pub fn map(&self, name: &str) -> Result<&MapSpec> {
        self.maps
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::input(format!("spec declares no map `{name}`")))
    }

    fn leg_dims(&self, legs: &[String]) -> Result<Vec<usize>> {
        legs.iter().map(|b| self.basis(b).map(|l| l.len())).collect()
    }

    /// The matrix of a declared map in the flattened tensor bases.
    pub fn linmap(&self, name: &str) -> Result<LinMap> {
        let m = self.map(name)?;
        let sd = self.leg_dims(&m.src)?;
        let dd = self.leg_dims(&m.dst)?;
        let index = |legs: &[String], dims: &[usize], labels: &[String]| -> Result<usize> {
            let mut tuple = Vec::with_capacity(legs.len());
            for (b, l) in legs.iter().zip(labels) {
                let ls = self.basis(b)?;
                tuple.push(
                    ls.iter()
                        .position(|x| x == l)
                        .ok_or_else(|| Error::input(format!("unknown label `{l}` in basis {b}")))?,
                );
            }
            Ok(flatten(&tuple, dims))
        };
        let mut entries = Vec::with_capacity(m.entries.len());
        for e in &m.entries {
            entries.push((index(&m.dst, &dd, &e.dst)?, index(&m.src, &sd, &e.src)?, e.coeff.clone()));
        }
        LinMap::from_entries(self.field, dd.iter().product(), sd.iter().product(), entries)
    }

    /// Like [`SpecFile::linmap`] but insists on the given leg shape.
    fn shaped(&self, name: &str, src: &[&str], dst: &[&str]) -> Result<LinMap> {
        let m = self.map(name)?;
        if m.src != src || m.dst != dst {
            let want = self.leg_dims(&src.iter().map(|s| s.to_string()).collect::<Vec<_>>())?;
            let got = self.leg_dims(&m.src)?;
            let want_d = self.leg_dims(&dst.iter().map(|s| s.to_string()).collect::<Vec<_>>())?;
            let got_d = self.leg_dims(&m.dst)?;
            return Err(Error::DimensionMismatch {
                context: format!(
                    "map {name} declared {} -> {}, expected {} -> {}",
                    legs_text(&m.src),
                    legs_text(&m.dst),
                    legs_text_str(src),
                    legs_text_str(dst)
                ),
                expected: want.iter().product::<usize>() * want_d.iter().product::<usize>(),
                found: got.iter().product::<usize>() * got_d.iter().product::<usize>(),
            });
        }
        self.linmap(name)
    }

    fn expect_kind(&self, kind: Kind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::input(format!("expected a {} spec, found {}", kind.name(), self.kind.name())))
        }
    }

    fn first_basis(&self) -> Result<&str> {
        self.bases
            .first()
            .map(|(n, _)| n.as_str())
            .ok_or_else(|| Error::input("spec declares no basis"))
    }

    fn map_name(prefix: &str, name: &str) -> String {
        if prefix.is_empty() {
            name.to_string()
        } else {
            format!("{prefix}.{name}")
        }
    }

    fn hopf_on(&self, basis: &str, prefix: &str) -> Result<HopfAlgebra> {
        let labels = self.basis(basis)?.to_vec();
        let n = |s: &str| SpecFile::map_name(prefix, s);
        let mult = self.shaped(&n("mult"), &[basis, basis], &[basis])?;
        let unit = self.shaped(&n("unit"), &[], &[basis])?;
        let comult = self.shaped(&n("comult"), &[basis], &[basis, basis])?;
        let counit = self.shaped(&n("counit"), &[basis], &[])?;
        let antipode = self.shaped(&n("antipode"), &[basis], &[basis])?;
        HopfAlgebra::new(
            AlgebraData::new(labels.clone(), mult, unit)?,
            CoalgebraData::new(labels, comult, counit)?,
            antipode,
        )
    }

    fn coalgebra_on(&self, basis: &str) -> Result<CoalgebraData> {
        let labels = self.basis(basis)?.to_vec();
        let comult = self.shaped("comult", &[basis], &[basis, basis])?;
        let counit = self.shaped("counit", &[basis], &[])?;
        CoalgebraData::new(labels, comult, counit)
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra> {
        self.expect_kind(Kind::Hopf)?;
        self.hopf_on(self.first_basis()?, "")
    }

    pub fn to_coalgebra(&self) -> Result<CoalgebraData> {
        self.expect_kind(Kind::Coalgebra)?;
        self.coalgebra_on(self.first_basis()?)
    }

    /// The coalgebra is the first basis, the comodule the second; the side
    /// is read from the target legs of `coaction`.
    pub fn to_comodule(&self) -> Result<Comodule> {
        self.expect_kind(Kind::Comodule)?;
        let c = self.first_basis()?;
        let v = self
            .bases
            .get(1)
            .map(|(n, _)| n.as_str())
            .ok_or_else(|| Error::input("comodule spec needs a second basis"))?;
        let coalgebra = self.coalgebra_on(c)?;
        let side = if self.map("coaction")?.dst.first().map(String::as_str) == Some(c) {
            Side::Left
        } else {
            Side::Right
        };
        let dst: [&str; 2] = match side {
            Side::Right => [v, c],
            Side::Left => [c, v],
        };
        let coaction = self.shaped("coaction", &[v], &dst)?;
        Comodule::new(side, coalgebra, coaction, self.basis(v)?.to_vec())
    }

    /// Relabels coordinates of `basis` into the order of `target`, failing
    /// with both dimensions when the label sets differ in size.
    fn reorder(&self, basis: &str, target: &[String]) -> Result<Vec<usize>> {
        let labels = self.basis(basis)?;
        if labels.len() != target.len() {
            return Err(Error::DimensionMismatch {
                context: format!("basis {basis} against the ambient Hopf algebra"),
                expected: target.len(),
                found: labels.len(),
            });
        }
        labels
            .iter()
            .map(|l| {
                target
                    .iter()
                    .position(|t| t == l)
                    .ok_or_else(|| Error::input(format!("label `{l}` of basis {basis} is not a label of H")))
            })
            .collect()
    }

    /// The span of the declared vectors inside `h`.
    pub fn to_subspace(&self, h: &HopfAlgebra) -> Result<Subspace> {
        self.expect_kind(Kind::Subspace)?;
        let basis = self.first_basis()?;
        let perm = self.reorder(basis, h.labels())?;
        let labels = self.basis(basis)?;
        let mut vs = Vec::new();
        for v in &self.vectors {
            let mut x = SVec::new();
            for (l, c) in &v.coeffs {
                let i = labels.iter().position(|t| t == l).expect("labels validated at parse time");
                x.add_term(perm[i], c);
            }
            vs.push(x);
        }
        Ok(Subspace::span(h.field(), h.dim(), vs))
    }

    /// Bases `H` (matching `h`) and `B`; maps `comult`, `counit` on `B`,
    /// `pi : H -> B` and `sigma : H B -> B`.
    pub fn to_quotient(&self, h: &HopfAlgebra) -> Result<QuotientModuleCoalgebra> {
        self.expect_kind(Kind::Quotient)?;
        let hb = self.first_basis()?;
        let bb = self
            .bases
            .get(1)
            .map(|(n, _)| n.as_str())
            .ok_or_else(|| Error::input("quotient spec needs a second basis"))?;
        let perm = self.reorder(hb, h.labels())?;
        let b = self.coalgebra_on(bb)?;
        let db = b.dim();
        let unperm = |m: &LinMap, extra: usize| -> LinMap {
            let cols = (0..m.cols())
                .map(|j| {
                    let (hi, r) = (j / extra, j % extra);
                    (perm[hi] * extra + r, j)
                })
                .collect::<BTreeMap<_, _>>();
            LinMap::from_columns(m.field(), m.rows(), cols.values().map(|&j| m.column(j).clone()).collect())
        };
        let pi = unperm(&self.shaped("pi", &[hb], &[bb])?, 1);
        let sigma = unperm(&self.shaped("sigma", &[hb, bb], &[bb])?, db);
        QuotientModuleCoalgebra::new(h, b, pi, sigma)
    }

    /// Bases `U` and `H`, maps prefixed `U.` and `H.`, and `form : U H -> k`.
    pub fn to_pairing(&self) -> Result<Pairing> {
        self.expect_kind(Kind::Pairing)?;
        let (ub, hb) = match self.bases.as_slice() {
            [(u, _), (h, _), ..] => (u.as_str(), h.as_str()),
            _ => return Err(Error::input("pairing spec needs two bases")),
        };
        let u = self.hopf_on(ub, ub)?;
        let h = self.hopf_on(hb, hb)?;
        let form = self.shaped("form", &[ub, hb], &[])?;
        Pairing::new(u, h, form)
    }

    fn new_spec(field: Field, kind: Kind) -> SpecFile {
        SpecFile {
            field,
            kind,
            bases: Vec::new(),
            maps: Vec::new(),
            vectors: Vec::new(),
        }
    }

    fn push_map(&mut self, name: &str, src: &[&str], dst: &[&str], m: &LinMap) {
        let labels = |legs: &[&str]| -> Vec<Vec<String>> {
            legs.iter()
                .map(|b| basis_labels(&self.bases, b).expect("basis pushed before its maps").to_vec())
                .collect()
        };
        let (sl, dl) = (labels(src), labels(dst));
        let sd: Vec<usize> = sl.iter().map(Vec::len).collect();
        let dd: Vec<usize> = dl.iter().map(Vec::len).collect();
        let name_of = |idx: usize, dims: &[usize], ls: &[Vec<String>]| -> Vec<String> {
            unflatten(idx, dims).iter().zip(ls).map(|(i, l)| l[*i].clone()).collect()
        };
        let entries = m
            .entries()
            .map(|(i, j, c)| Entry {
                src: name_of(j, &sd, &sl),
                dst: name_of(i, &dd, &dl),
                coeff: c.clone(),
            })
            .collect();
        self.maps.push(MapSpec {
            name: name.to_string(),
            src: src.iter().map(|s| s.to_string()).collect(),
            dst: dst.iter().map(|s| s.to_string()).collect(),
            entries,
        });
    }

    fn push_hopf(&mut self, h: &HopfAlgebra, basis: &str, prefix: &str) {
        self.bases.push((basis.to_string(), h.labels().to_vec()));
        let n = |s: &str| SpecFile::map_name(prefix, s);
        self.push_map(&n("mult"), &[basis, basis], &[basis], h.mult());
        self.push_map(&n("unit"), &[], &[basis], h.unit());
        self.push_map(&n("comult"), &[basis], &[basis, basis], h.comult());
        self.push_map(&n("counit"), &[basis], &[], h.counit());
        self.push_map(&n("antipode"), &[basis], &[basis], h.antipode());
    }

    pub fn from_hopf(h: &HopfAlgebra) -> SpecFile {
        let mut s = SpecFile::new_spec(h.field(), Kind::Hopf);
        s.push_hopf(h, "H", "");
        s
    }

    pub fn from_coalgebra(c: &CoalgebraData) -> SpecFile {
        let mut s = SpecFile::new_spec(c.field(), Kind::Coalgebra);
        s.bases.push(("C".into(), c.labels().to_vec()));
        s.push_map("comult", &["C"], &["C", "C"], c.comult());
        s.push_map("counit", &["C"], &[], c.counit());
        s
    }

    pub fn from_comodule(m: &Comodule) -> SpecFile {
        let c = m.coalgebra();
        let mut s = SpecFile::new_spec(c.field(), Kind::Comodule);
        s.bases.push(("C".into(), c.labels().to_vec()));
        s.bases.push(("V".into(), m.labels().to_vec()));
        s.push_map("comult", &["C"], &["C", "C"], c.comult());
        s.push_map("counit", &["C"], &[], c.counit());
        let dst: [&str; 2] = match m.side() {
            Side::Right => ["V", "C"],
            Side::Left => ["C", "V"],
        };
        s.push_map("coaction", &["V"], &dst, m.coaction());
        s
    }

    pub fn from_subspace(h: &HopfAlgebra, sub: &Subspace) -> SpecFile {
        let mut s = SpecFile::new_spec(h.field(), Kind::Subspace);
        s.bases.push(("H".into(), h.labels().to_vec()));
        for (k, v) in sub.basis().iter().enumerate() {
            s.vectors.push(VectorSpec {
                name: format!("a{k}"),
                basis: "H".into(),
                coeffs: v.iter().map(|(i, c)| (h.labels()[*i].clone(), c.clone())).collect(),
            });
        }
        s
    }

    pub fn from_quotient(q: &QuotientModuleCoalgebra) -> SpecFile {
        let h = q.hopf();
        let mut s = SpecFile::new_spec(h.field(), Kind::Quotient);
        s.bases.push(("H".into(), h.labels().to_vec()));
        s.bases.push(("B".into(), q.b().labels().to_vec()));
        s.push_map("comult", &["B"], &["B", "B"], q.b().comult());
        s.push_map("counit", &["B"], &[], q.b().counit());
        s.push_map("pi", &["H"], &["B"], q.pi());
        s.push_map("sigma", &["H", "B"], &["B"], q.sigma());
        s
    }

    pub fn from_pairing(p: &Pairing) -> SpecFile {
        let mut s = SpecFile::new_spec(p.h().field(), Kind::Pairing);
        s.push_hopf(p.u(), "U", "U");
        s.push_hopf(p.h(), "H", "H");
        s.push_map("form", &["U", "H"], &[], p.form());
        s
    }
}

fn basis_labels<'a>(bases: &'a [(String, Vec<String>)], name: &str) -> Option<&'a [String]> {
    bases.iter().find(|(n, _)| n == name).map(|(_, l)| l.as_slice())
}

fn parse_field(v: &str) -> std::result::Result<Field, String> {
    if v == "Q" {
        return Ok(Field::Rational);
    }
    let p: u64 = v
        .strip_prefix('F')
        .unwrap_or(v)
        .parse()
        .map_err(|_| format!("field must be `Q` or a prime, found `{v}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn field_text(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => p.to_string(),
    }
}

fn legs_text(legs: &[String]) -> String {
    if legs.is_empty() {
        "k".into()
    } else {
        legs.join(" ")
    }
}

fn legs_text_str(legs: &[&str]) -> String {
    if legs.is_empty() {
        "k".into()
    } else {
        legs.join(" ")
    }
}

fn arrow_text(src: &[String], dst: &[String]) -> String {
    let side = |v: &[String]| if v.is_empty() { String::new() } else { format!("{} ", v.join(" ")) };
    format!("{}->{}", side(src), if dst.is_empty() { String::new() } else { format!(" {}", dst.join(" ")) })
}

fn parse_map_header(ln: usize, toks: &[(usize, &str)], bases: &[(String, Vec<String>)]) -> Result<MapSpec> {
    let col0 = toks[0].0;
    let name = toks.get(1).ok_or_else(|| parse_err(ln, col0, "expected map name"))?;
    if toks.get(2).map(|t| t.1) != Some(":") {
        let c = toks.get(2).map_or(name.0 + name.1.chars().count(), |t| t.0);
        return Err(parse_err(ln, c, "expected `:` after map name"));
    }
    let rest = &toks[3..];
    let arrow = rest
        .iter()
        .position(|t| t.1 == "->")
        .ok_or_else(|| parse_err(ln, col0, "expected `SRC -> DST`"))?;
    let legs = |part: &[(usize, &str)]| -> Result<Vec<String>> {
        if part.is_empty() {
            return Err(parse_err(ln, col0, "empty side; write `k` for the ground field"));
        }
        if part.len() == 1 && part[0].1 == "k" {
            return Ok(Vec::new());
        }
        part.iter()
            .map(|&(c, b)| {
                if basis_labels(bases, b).is_some() {
                    Ok(b.to_string())
                } else {
                    Err(parse_err(ln, c, format!("undeclared basis `{b}`")))
                }
            })
            .collect()
    };
    Ok(MapSpec {
        name: name.1.to_string(),
        src: legs(&rest[..arrow])?,
        dst: legs(&rest[arrow + 1..])?,
        entries: Vec::new(),
    })
}

fn parse_coeff(ln: usize, toks: &[(usize, &str)], line: &str, f: Field) -> Result<Scalar> {
    match toks {
        [(_, ":"), (c, v)] => f.parse_scalar(v).map_err(|e| parse_err(ln, *c, e.to_string())),
        [(c, ":")] => Err(parse_err(ln, *c + 1, "missing coefficient")),
        [(c, _), ..] => Err(parse_err(ln, *c, "expected `: coefficient`")),
        [] => Err(parse_err(ln, line.chars().count() + 1, "expected `: coefficient`")),
    }
}

fn parse_entry(
    ln: usize,
    toks: &[(usize, &str)],
    line: &str,
    f: Field,
    m: &MapSpec,
    bases: &[(String, Vec<String>)],
) -> Result<Entry> {
    let arrow = toks
        .iter()
        .position(|t| t.1 == "->")
        .ok_or_else(|| parse_err(ln, toks[0].0, "expected `->` in entry"))?;
    let colon = toks
        .iter()
        .position(|t| t.1 == ":")
        .ok_or_else(|| parse_err(ln, line.chars().count() + 1, "expected `: coefficient`"))?;
    if colon < arrow {
        return Err(parse_err(ln, toks[colon].0, "`:` before `->`"));
    }
    let side = |part: &[(usize, &str)], legs: &[String], what: &str| -> Result<Vec<String>> {
        if part.len() != legs.len() {
            let c = part.first().map_or(toks[arrow].0, |t| t.0);
            return Err(parse_err(
                ln,
                c,
                format!("{what} of map {} has {} legs, entry lists {} labels", m.name, legs.len(), part.len()),
            ));
        }
        part.iter()
            .zip(legs)
            .map(|(&(c, l), b)| {
                let labels = basis_labels(bases, b).expect("legs validated in header");
                if labels.iter().any(|x| x == l) {
                    Ok(l.to_string())
                } else {
                    Err(parse_err(ln, c, format!("unknown label `{l}` in basis {b}")))
                }
            })
            .collect()
    };
    Ok(Entry {
        src: side(&toks[..arrow], &m.src, "source")?,
        dst: side(&toks[arrow + 1..colon], &m.dst, "target")?,
        coeff: parse_coeff(ln, &toks[colon..], line, f)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, sweedler4};

    #[test]
    fn roundtrip_through_text() {
        for name in ["k", "kC2", "k^S3", "sweedler4"] {
            let h = by_name(name, &[]).unwrap();
            let s = SpecFile::from_hopf(&h);
            let text = s.serialize();
            let back = SpecFile::parse(&text).unwrap();
            assert_eq!(back, s, "{name}");
            assert!(back.to_hopf().unwrap().same_structure(&h));
        }
    }

    #[test]
    fn hash_ignores_label_and_entry_order() {
        let s = SpecFile::from_hopf(&sweedler4());
        let mut t = s.clone();
        t.bases[0].1.reverse();
        for m in &mut t.maps {
            m.entries.reverse();
        }
        assert_eq!(s.content_hash(), t.content_hash());
        let mut u = s.clone();
        u.maps[0].entries[0].coeff = Field::Rational.from_i64(2);
        assert_ne!(s.content_hash(), u.content_hash());
    }

    #[test]
    fn errors_carry_positions() {
        let text = "field Q\nkind hopf\nbasis H: 1 g\nmap mult : H H -> H\n  1 q -> g : 1\n";
        match SpecFile::parse(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (5, 5)),
            other => panic!("{other:?}"),
        }
        let text = "field Q\nkind hopf\nbasis H: 1\nmap mult : H X -> H\n";
        match SpecFile::parse(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 14)),
            other => panic!("{other:?}"),
        }
        let text = "field Q\nkind hopf\nbasis H: 1\nmap unit : k -> H\n  -> 1 : 1/0\n";
        assert!(matches!(SpecFile::parse(text), Err(Error::Parse { line: 5, column: 10, .. })));
    }

    #[test]
    fn wrong_shape_reports_both_dimensions() {
        let mut s = SpecFile::from_hopf(&sweedler4());
        s.maps[0].src = vec!["H".into()];
        s.maps[0].entries.clear();
        match s.to_hopf() {
            Err(Error::DimensionMismatch { expected, found, .. }) => assert_eq!((expected, found), (64, 16)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn subspace_follows_hopf_labels() {
        let h = sweedler4();
        let text = "field Q\nkind subspace\nbasis H: gx x g 1\nvector a : H\n  1 : 1\nvector b : H\n  g : 1\n";
        let s = SpecFile::parse(text).unwrap().to_subspace(&h).unwrap();
        assert_eq!(s, Subspace::span(h.field(), 4, vec![h.element("1"), h.element("g")]));
        let bad = "field Q\nkind subspace\nbasis H: 1 g x\n";
        assert!(matches!(
            SpecFile::parse(bad).unwrap().to_subspace(&h),
            Err(Error::DimensionMismatch { expected: 4, found: 3, .. })
        ));
    }

    #[test]
    fn comodule_and_quotient_roundtrip() {
        let h = sweedler4();
        let m = Comodule::regular(Side::Left, h.coalgebra());
        let back = SpecFile::parse(&SpecFile::from_comodule(&m).serialize()).unwrap().to_comodule().unwrap();
        assert_eq!(back.side(), Side::Left);
        assert_eq!(back.coaction(), m.coaction());
        let q = QuotientModuleCoalgebra::identity(&h);
        let back = SpecFile::parse(&SpecFile::from_quotient(&q).serialize())
            .unwrap()
            .to_quotient(&h)
            .unwrap();
        assert_eq!(back.pi(), q.pi());
        assert_eq!(back.sigma(), q.sigma());
    }

    #[test]
    fn prime_field_scalars_reduce() {
        let text = "field 7\nkind coalgebra\nbasis C: c\nmap comult : C -> C C\n  c -> c c : 8\nmap counit : C -> k\n  c -> : -6\n";
        let c = SpecFile::parse(text).unwrap().to_coalgebra().unwrap();
        assert!(c.check().all_hold());
    }
}

//! Line-oriented text format for algebras, axis sets, fusion laws and cocycles.
//!
//! ```text
//! # comment
//! field Q
//! dim 2
//! basis e1 e2
//! product e1 e1 : 1 e1
//! product e1 e2 : 1/2 e1 1/2 e2
//! element a : 1 e1 -1 e2
//! law F : 1 0 -1
//! star F 1 1 : 1
//! axes X law F : e1 a
//! cocycle theta 1
//! theta theta 1 e1 e2 : 1
//! ```
//!
//! Products are listed once per unordered pair with the first label at or
//! before the second; omitted products are zero. Coefficient lists are
//! `coef label` pairs. Axis members name an `element` or a basis label.
//! Scalars use the [`Scalar`] text grammar.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{sym_index, Algebra, BilinearForm, Element};
use crate::catalog::{AxisSet, CatalogEntry};
use crate::error::{Error, Result};
use crate::extension::Cocycle;
use crate::field::{FieldTag, Scalar};
use crate::fusion::FusionLaw;
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub elements: Vec<(String, Element)>,
    pub axis_sets: Vec<AxisSet>,
    pub laws: Vec<(String, FusionLaw)>,
    pub cocycles: Vec<(String, Cocycle)>,
}

impl AlgebraFile {
    pub fn axis_set(&self, name: &str) -> Result<&AxisSet> {
        self.axis_sets.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownEntry(format!("axis set `{name}`")))
    }

    pub fn law(&self, name: &str) -> Result<&FusionLaw> {
        lookup(&self.laws, name, "fusion law")
    }

    pub fn element(&self, name: &str) -> Result<&Element> {
        lookup(&self.elements, name, "element")
    }

    pub fn cocycle(&self, name: &str) -> Result<&Cocycle> {
        lookup(&self.cocycles, name, "cocycle")
    }
}

fn lookup<'a, T>(items: &'a [(String, T)], name: &str, kind: &str) -> Result<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, x)| x).ok_or_else(|| Error::UnknownEntry(format!("{kind} `{name}`")))
}

impl From<&CatalogEntry> for AlgebraFile {
    fn from(e: &CatalogEntry) -> Self {
        let mut cocycles = Vec::new();
        if let Some(c) = &e.cocycle {
            cocycles.push(("theta".to_string(), c.clone()));
        }
        AlgebraFile {
            algebra: e.algebra.clone(),
            elements: e.elements.clone(),
            axis_sets: e.axis_sets.clone(),
            laws: e.laws.clone(),
            cocycles,
        }
    }
}

struct Reader<'a> {
    file: &'a str,
    line: usize,
}

impl Reader<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::File { file: self.file.to_string(), line: self.line, msg: msg.into() }
    }

    fn wrap<T>(&self, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::File { .. } => e,
            other => self.err(other.to_string()),
        })
    }
}

/// Splits `head : tail` into words.
fn split_colon(rest: &str) -> (Vec<&str>, Option<Vec<&str>>) {
    match rest.split_once(':') {
        Some((h, t)) => (h.split_whitespace().collect(), Some(t.split_whitespace().collect())),
        None => (rest.split_whitespace().collect(), None),
    }
}

pub fn parse(text: &str, file: &str) -> Result<AlgebraFile> {
    let mut rd = Reader { file, line: 0 };
    let mut field: Option<FieldTag> = None;
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut products: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
    let mut elements: Vec<(String, Element)> = Vec::new();
    let mut laws: Vec<(String, FusionLaw)> = Vec::new();
    let mut raw_sets: Vec<(usize, String, String, Vec<String>)> = Vec::new();
    let mut cocycles: BTreeMap<String, (usize, Vec<Matrix>)> = BTreeMap::new();
    let mut cocycle_order: Vec<String> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        rd.line = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let (head, tail) = split_colon(rest);
        let tag = || field.ok_or_else(|| rd.err("`field` must come first"));
        let basis = || labels.as_ref().ok_or_else(|| rd.err("`basis` must come before this line"));
        let scalar = |s: &str| rd.wrap(Scalar::parse(s, tag()?));
        let index = |l: &str| -> Result<usize> {
            basis()?.iter().position(|x| x == l).ok_or_else(|| rd.err(format!("unknown basis label `{l}`")))
        };
        let vector = |words: &[&str]| -> Result<Vec<Scalar>> {
            if !words.len().is_multiple_of(2) {
                return Err(rd.err("coefficients must come in `coef label` pairs"));
            }
            let mut v = vec![Scalar::zero(); basis()?.len()];
            for pair in words.chunks(2) {
                let c = scalar(pair[0])?;
                v[index(pair[1])?] += &c;
            }
            Ok(v)
        };
        let need_tail = || tail.clone().ok_or_else(|| rd.err(format!("`{kw}` needs `:`")));
        match kw {
            "field" => {
                if field.is_some() {
                    return Err(rd.err("duplicate `field`"));
                }
                field = Some(rd.wrap(FieldTag::parse_name(rest))?);
            }
            "dim" => {
                dim = Some(rest.trim().parse().map_err(|_| rd.err(format!("bad dimension `{rest}`")))?);
            }
            "basis" => {
                if labels.is_some() {
                    return Err(rd.err("duplicate `basis`"));
                }
                let ls: Vec<String> = head.iter().map(|s| s.to_string()).collect();
                if let Some(d) = dim {
                    if d != ls.len() {
                        return Err(rd.err(format!("`dim {d}` but {} basis labels", ls.len())));
                    }
                }
                labels = Some(ls);
            }
            "product" => {
                let [a, b] = head[..] else {
                    return Err(rd.err("`product` takes two basis labels"));
                };
                let (i, j) = (index(a)?, index(b)?);
                if i > j {
                    return Err(rd.err(format!("write `product {b} {a}`: first label must not come after the second")));
                }
                if products.iter().any(|p| p.0 == i && p.1 == j) {
                    return Err(rd.err(format!("product {a} {b} given twice")));
                }
                products.push((i, j, vector(&need_tail()?)?));
            }
            "element" => {
                let [name] = head[..] else {
                    return Err(rd.err("`element` takes one name"));
                };
                if elements.iter().any(|(n, _)| n == name) {
                    return Err(rd.err(format!("element `{name}` defined twice")));
                }
                elements.push((name.to_string(), Element::new(vector(&need_tail()?)?)));
            }
            "law" => {
                let [name] = head[..] else {
                    return Err(rd.err("`law` takes one name"));
                };
                let values = need_tail()?.iter().map(|s| scalar(s)).collect::<Result<Vec<_>>>()?;
                if laws.iter().any(|(n, _)| n == name) {
                    return Err(rd.err(format!("law `{name}` defined twice")));
                }
                laws.push((name.to_string(), rd.wrap(FusionLaw::new(values))?));
            }
            "star" => {
                let [name, a, b] = head[..] else {
                    return Err(rd.err("`star` takes a law name and two values"));
                };
                let (a, b) = (scalar(a)?, scalar(b)?);
                let ts = need_tail()?.iter().map(|s| scalar(s)).collect::<Result<Vec<_>>>()?;
                let law = laws
                    .iter_mut()
                    .find(|(n, _)| n == name)
                    .map(|(_, l)| l)
                    .ok_or_else(|| rd.err(format!("unknown law `{name}`")))?;
                for t in &ts {
                    law.add(&a, &b, t).map_err(|e| rd.err(e.to_string()))?;
                }
            }
            "axes" => {
                let [name, "law", law] = head[..] else {
                    return Err(rd.err("expected `axes <name> law <law> : <elements>`"));
                };
                let members = need_tail()?.iter().map(|s| s.to_string()).collect();
                raw_sets.push((rd.line, name.to_string(), law.to_string(), members));
            }
            "cocycle" => {
                let [name, s] = head[..] else {
                    return Err(rd.err("`cocycle` takes a name and a dimension"));
                };
                let s: usize = s.parse().map_err(|_| rd.err(format!("bad cocycle dimension `{s}`")))?;
                let n = basis()?.len();
                if cocycles.insert(name.to_string(), (s, vec![Matrix::zeros(n, n, tag()?); s])).is_some() {
                    return Err(rd.err(format!("cocycle `{name}` defined twice")));
                }
                cocycle_order.push(name.to_string());
            }
            "theta" => {
                let [name, k, a, b] = head[..] else {
                    return Err(rd.err("expected `theta <cocycle> <coordinate> <label> <label> : <coef>`"));
                };
                let t = need_tail()?;
                let [c] = t[..] else {
                    return Err(rd.err("`theta` takes one coefficient"));
                };
                let c = scalar(c)?;
                let (i, j) = (index(a)?, index(b)?);
                let (s, grams) = cocycles.get_mut(name).ok_or_else(|| rd.err(format!("unknown cocycle `{name}`")))?;
                let k: usize = k.parse().map_err(|_| rd.err(format!("bad coordinate `{k}`")))?;
                if k == 0 || k > *s {
                    return Err(rd.err(format!("coordinate {k} outside 1..={s}")));
                }
                grams[k - 1][(i, j)] = c.clone();
                grams[k - 1][(j, i)] = c;
            }
            other => return Err(rd.err(format!("unknown keyword `{other}`"))),
        }
    }

    rd.line = 0;
    let field = field.ok_or_else(|| rd.err("missing `field`"))?;
    let labels = labels.ok_or_else(|| rd.err("missing `basis`"))?;
    let n = labels.len();
    if let Some(d) = dim {
        if d != n {
            return Err(rd.err(format!("`dim {d}` but {n} basis labels")));
        }
    }
    let algebra = rd.wrap(Algebra::from_products(labels, field, &products))?;
    let mut axis_sets = Vec::new();
    for (line, name, law, members) in raw_sets {
        rd.line = line;
        if !laws.iter().any(|(n, _)| *n == law) {
            return Err(rd.err(format!("unknown law `{law}`")));
        }
        let axes = members
            .iter()
            .map(|m| match lookup(&elements, m, "element") {
                Ok(e) => Ok(e.clone()),
                Err(_) => algebra
                    .index_of(m)
                    .map(|i| Element::basis(n, i))
                    .ok_or_else(|| rd.err(format!("`{m}` is neither an element nor a basis label"))),
            })
            .collect::<Result<Vec<_>>>()?;
        axis_sets.push(AxisSet { name, axes, law });
    }
    rd.line = 0;
    let mut cocycle_list = Vec::new();
    for name in cocycle_order {
        let (_, grams) = cocycles.remove(&name).expect("recorded");
        let forms = grams.into_iter().map(BilinearForm::new).collect::<Result<Vec<_>>>();
        let c = rd.wrap(forms.and_then(|f| Cocycle::new(n, field, f)))?;
        cocycle_list.push((name, c));
    }
    Ok(AlgebraFile { algebra, elements, axis_sets, laws, cocycles: cocycle_list })
}

fn write_vector(out: &mut String, labels: &[String], v: &[Scalar]) {
    for (c, l) in v.iter().zip(labels) {
        if !c.is_zero() {
            let _ = write!(out, " {c} {l}");
        }
    }
}

/// Text form accepted by [`parse`]; axes without a name get `<set>.<k>`.
pub fn render(f: &AlgebraFile) -> String {
    let alg = &f.algebra;
    let labels = alg.labels();
    let n = alg.dim();
    let mut out = String::new();
    let _ = writeln!(out, "field {}", alg.field().name());
    let _ = writeln!(out, "dim {n}");
    let _ = writeln!(out, "basis {}", labels.join(" "));
    for i in 0..n {
        for j in i..n {
            let p = alg.basis_product(i, j);
            if !p.is_zero() {
                let _ = write!(out, "product {} {} :", labels[i], labels[j]);
                write_vector(&mut out, labels, &p);
                out.push('\n');
            }
        }
    }
    let mut elements = f.elements.clone();
    let mut set_lines = Vec::new();
    for set in &f.axis_sets {
        let mut names = Vec::new();
        for (k, a) in set.axes.iter().enumerate() {
            let name = match elements.iter().find(|(_, e)| e == a) {
                Some((nm, _)) => nm.clone(),
                None => {
                    let nm = format!("{}.{}", set.name, k + 1);
                    elements.push((nm.clone(), a.clone()));
                    nm
                }
            };
            names.push(name);
        }
        set_lines.push(format!("axes {} law {} : {}", set.name, set.law, names.join(" ")));
    }
    for (name, e) in &elements {
        let _ = write!(out, "element {name} :");
        write_vector(&mut out, labels, e);
        out.push('\n');
    }
    for (name, law) in &f.laws {
        let (values, cells) = law.canonical_cells();
        let vs: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "law {name} : {}", vs.join(" "));
        for (a, b, ts) in cells {
            let ts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(out, "star {name} {a} {b} : {}", ts.join(" "));
        }
    }
    for line in set_lines {
        out.push_str(&line);
        out.push('\n');
    }
    for (name, c) in &f.cocycles {
        let _ = writeln!(out, "cocycle {name} {}", c.coords());
        for (k, form) in c.forms().iter().enumerate() {
            let upper = form.to_upper();
            for i in 0..n {
                for j in i..n {
                    let x = &upper[sym_index(n, i, j)];
                    if !x.is_zero() {
                        let _ = writeln!(out, "theta {name} {} {} {} : {x}", k + 1, labels[i], labels[j]);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_default, build_with};

    const SAMPLE: &str = "\
# B from the two-dimensional list
field Q
basis e1 e2
product e1 e1 : 1 e1
product e2 e2 : 1 e2
element a4 : 1 e1 1 e2
law FB : 1 0 -1
star FB 1 1 : 1
axes X12 law FB : e1 a4
cocycle t 1
theta t 1 e1 e2 : -1/2
";

    #[test]
    fn parses_sample() {
        let f = parse(SAMPLE, "sample").unwrap();
        assert_eq!(f.algebra.dim(), 2);
        assert_eq!(f.algebra.basis_product(0, 0).coords(), &[Scalar::one(), Scalar::zero()]);
        assert!(f.algebra.basis_product(0, 1).is_zero());
        assert_eq!(f.axis_set("X12").unwrap().axes[1], Element::from_ints(&[1, 1]));
        assert_eq!(f.law("FB").unwrap().star(&Scalar::one(), &Scalar::one()), vec![Scalar::one()]);
        let t = f.cocycle("t").unwrap();
        assert_eq!(t.eval(&Element::basis(2, 1), &Element::basis(2, 0)), vec![Scalar::frac(-1, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = SAMPLE.replace("product e2 e2", "product e2 e1");
        match parse(&bad, "x").unwrap_err() {
            Error::File { line, .. } => assert_eq!(line, 5),
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse("basis e1\n", "x").is_err());
        assert!(parse("field Q\nbasis e1\nproduct e1 e1 : (1)+(1)i e1\n", "x").is_err());
        assert!(parse("field Q\nbasis e1\nproduct e1 e1 : 1\n", "x").is_err());
        assert!(parse("field Q\nbasis e1\nfrob e1\n", "x").is_err());
        assert!(parse("field Q\ndim 2\nbasis e1\n", "x").is_err());
        assert!(parse("field Q\nbasis e1\nelement a : 1 e1\naxes X law F : a\n", "x").is_err());
    }

    fn round_trip(e: &CatalogEntry) {
        let file = AlgebraFile::from(e);
        let text = render(&file);
        let back = parse(&text, "rt").unwrap();
        assert_eq!(back.algebra.tensor(), e.algebra.tensor());
        assert_eq!(back.algebra.labels(), e.algebra.labels());
        assert_eq!(back.algebra.field(), e.algebra.field());
        for set in &e.axis_sets {
            let b = back.axis_set(&set.name).unwrap();
            assert_eq!(b.axes, set.axes);
            assert_eq!(b.law, set.law);
        }
        for (name, law) in &e.laws {
            assert_eq!(back.law(name).unwrap(), law);
        }
        if let Some(c) = &e.cocycle {
            let b = back.cocycle("theta").unwrap();
            assert_eq!(b.forms().len(), c.forms().len());
            for (x, y) in b.forms().iter().zip(c.forms()) {
                assert_eq!(x.to_upper(), y.to_upper());
            }
        }
        assert_eq!(render(&back), text);
    }

    #[test]
    fn catalog_entries_round_trip() {
        for name in ["A", "B", "C", "D", "E", "F", "G", "H", "I", "Monster4", "J25", "J53", "J59", "JordanC"] {
            round_trip(&build_default(name).unwrap());
        }
        round_trip(&build_with("JordanD", &[("n", Scalar::from_int(3))]).unwrap());
    }
}

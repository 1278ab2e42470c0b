//! Named algebras with their axis sets, fusion laws and reference data.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, BilinearForm, Element};
use crate::error::{Error, Result};
use crate::extension::Cocycle;
use crate::field::{to_small_int, Scalar};
use crate::fusion::FusionLaw;

mod albert;
mod jordan_small;
mod simple;
mod two_dim;

pub use albert::octonion_product;

/// A named generating set of axes together with the law it is checked against.
#[derive(Clone, Debug)]
pub struct AxisSet {
    pub name: String,
    pub axes: Vec<Element>,
    pub law: String,
}

/// A built catalog entry.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, Scalar>,
    pub algebra: Algebra,
    /// Distinguished elements such as `a3` or `a_alpha`.
    pub elements: Vec<(String, Element)>,
    pub axis_sets: Vec<AxisSet>,
    pub laws: Vec<(String, FusionLaw)>,
    pub cocycle: Option<Cocycle>,
    pub frobenius: Option<BilinearForm>,
    /// Reference facts as `(key, value)` pairs, e.g. `("primitive:X1a3", "no")`.
    pub facts: Vec<(String, String)>,
}

impl CatalogEntry {
    fn new(name: &str, params: &Params, algebra: Algebra) -> Self {
        CatalogEntry {
            name: name.to_string(),
            params: params.values.clone(),
            algebra,
            elements: Vec::new(),
            axis_sets: Vec::new(),
            laws: Vec::new(),
            cocycle: None,
            frobenius: None,
            facts: Vec::new(),
        }
    }

    pub fn axis_set(&self, name: &str) -> Result<&AxisSet> {
        self.axis_sets
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownEntry(format!("axis set `{name}` of {}", self.name)))
    }

    pub fn law(&self, name: &str) -> Result<&FusionLaw> {
        self.laws
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, l)| l)
            .ok_or_else(|| Error::UnknownEntry(format!("fusion law `{name}` of {}", self.name)))
    }

    pub fn element(&self, name: &str) -> Result<&Element> {
        self.elements
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
            .ok_or_else(|| Error::UnknownEntry(format!("element `{name}` of {}", self.name)))
    }

    pub fn fact(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn push_set(&mut self, name: &str, axes: Vec<Element>, law: &str) {
        self.axis_sets.push(AxisSet { name: name.into(), axes, law: law.into() });
    }

    fn push_law(&mut self, name: &str, law: FusionLaw) {
        self.laws.push((name.into(), law));
    }

    fn push_fact(&mut self, key: &str, value: &str) {
        self.facts.push((key.into(), value.into()));
    }
}

/// Parameter slot of a catalog entry.
#[derive(Clone, Debug)]
pub struct ParamSlot {
    pub name: &'static str,
    pub default: &'static str,
    pub integer: bool,
}

/// One line of [`list_catalog`].
#[derive(Clone, Debug)]
pub struct Listing {
    pub name: &'static str,
    pub params: Vec<ParamSlot>,
    pub description: &'static str,
    /// Product table not available; [`build`] refuses the entry.
    pub stub: bool,
}

impl Listing {
    pub fn signature(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
        if ps.is_empty() {
            self.name.to_string()
        } else {
            format!("{}({})", self.name, ps.join(", "))
        }
    }
}

/// Parameters after defaults are filled in.
pub(crate) struct Params {
    values: BTreeMap<String, Scalar>,
}

impl Params {
    pub(crate) fn get(&self, key: &str) -> Scalar {
        self.values[key].clone()
    }

    pub(crate) fn int(&self, key: &str) -> usize {
        to_small_int(&self.values[key]).expect("integer slot checked") as usize
    }
}

type Builder = fn(&Params) -> Result<CatalogEntry>;

struct EntryDef {
    name: &'static str,
    params: &'static [(&'static str, &'static str, bool)],
    description: &'static str,
    builder: Option<Builder>,
}

const ALPHA: (&str, &str, bool) = ("alpha", "3", false);
const BETA: (&str, &str, bool) = ("beta", "5", false);
const N2: (&str, &str, bool) = ("n", "2", true);

static REGISTRY: &[EntryDef] = &[
    EntryDef { name: "A", params: &[], description: "2-dim, e1e2 = 0", builder: Some(two_dim::a) },
    EntryDef { name: "B", params: &[], description: "2-dim, e1e2 = -e1-e2", builder: Some(two_dim::b) },
    EntryDef { name: "C", params: &[ALPHA], description: "2-dim, e1e2 = alpha(e1+e2)", builder: Some(two_dim::c) },
    EntryDef { name: "D", params: &[BETA], description: "2-dim, e1e2 = beta e2", builder: Some(two_dim::d) },
    EntryDef {
        name: "E",
        params: &[ALPHA, BETA],
        description: "2-dim, e1e2 = alpha e1 + beta e2",
        builder: Some(two_dim::e),
    },
    EntryDef { name: "F", params: &[], description: "2-dim, e1e2 = e1/2", builder: Some(two_dim::f) },
    EntryDef { name: "G", params: &[BETA], description: "2-dim, e1e2 = e1/2 + beta e2", builder: Some(two_dim::g) },
    EntryDef {
        name: "H",
        params: &[("gamma", "3", false)],
        description: "2-dim, e1e2 = (gamma/2)e1 + (1/(2gamma))e2",
        builder: Some(two_dim::h),
    },
    EntryDef {
        name: "I",
        params: &[("alpha", "1", false), ("beta", "2", false)],
        description: "2-dim, e1e2 = (e1+e2)/2, axes a_alpha, a_beta",
        builder: Some(two_dim::i),
    },
    EntryDef {
        name: "S",
        params: &[N2],
        description: "n copies of the 1-dim idempotent algebra",
        builder: Some(jordan_small::s),
    },
    EntryDef { name: "J", params: &[N2], description: "ee = e, en_i = n_i/2", builder: Some(jordan_small::j) },
    EntryDef {
        name: "T",
        params: &[("n", "3", true)],
        description: "ee = e, en1 = n1, n2n2 = n1, en_i = n_i/2 (i >= 2)",
        builder: Some(jordan_small::t),
    },
    EntryDef {
        name: "JJ",
        params: &[N2, ("m", "2", true)],
        description: "direct sum J_n + J_m",
        builder: Some(jordan_small::jj),
    },
    EntryDef {
        name: "TT",
        params: &[("n", "3", true), ("m", "1", true)],
        description: "direct sum T_n + T_m",
        builder: Some(jordan_small::tt),
    },
    EntryDef {
        name: "J25",
        params: &[("alpha", "1", false), ("beta", "1", false)],
        description: "4-dim Jordan, idempotents e, a(alpha), b(beta)",
        builder: Some(jordan_small::j25),
    },
    EntryDef {
        name: "J53",
        params: &[("alpha", "1", false)],
        description: "4-dim Jordan, idempotents e + alpha n1 - alpha^2 n2 + alpha^2 n3",
        builder: Some(jordan_small::j53),
    },
    EntryDef {
        name: "J59",
        params: &[("alpha", "1", false), ("beta", "1", false)],
        description: "4-dim Jordan, idempotents e - beta(2alpha+beta)n1 + alpha n2 + beta n3",
        builder: Some(jordan_small::j59),
    },
    EntryDef {
        name: "Monster4",
        params: &[],
        description: "4-dim axial algebra of Monster type (2, 1/2) on a-1, a0, a1, a2",
        builder: Some(jordan_small::monster4),
    },
    EntryDef {
        name: "JordanA",
        params: &[N2],
        description: "n x n matrices, X.Y = (XY+YX)/2",
        builder: Some(simple::type_a),
    },
    EntryDef { name: "JordanB", params: &[N2], description: "symmetric n x n matrices", builder: Some(simple::type_b) },
    EntryDef {
        name: "JordanC",
        params: &[N2],
        description: "2n x 2n matrices fixed by the symplectic transpose",
        builder: Some(simple::type_c),
    },
    EntryDef {
        name: "JordanD",
        params: &[("n", "3", true)],
        description: "spin factor on Q(i)^n, xy = x_n y + y_n x - (x.y) e_n",
        builder: Some(simple::type_d),
    },
    EntryDef {
        name: "Albert",
        params: &[],
        description: "27-dim Hermitian 3 x 3 octonion matrices",
        builder: Some(albert::albert),
    },
    EntryDef { name: "F1+F1", params: &[], description: "same as S with n = 2", builder: Some(jordan_small::f1f1) },
    EntryDef {
        name: "F1+F1+F1",
        params: &[],
        description: "same as S with n = 3",
        builder: Some(jordan_small::f1f1f1),
    },
    EntryDef { name: "T9", params: &[], description: "same as T with n = 3", builder: Some(jordan_small::alias_t9) },
    EntryDef { name: "J3", params: &[], description: "same as S with n = 4", builder: Some(jordan_small::alias_j3) },
    EntryDef { name: "J6", params: &[], description: "J_2 + J_1 + J_1", builder: Some(jordan_small::alias_j6) },
    EntryDef { name: "J12", params: &[], description: "J_3 + J_1", builder: Some(jordan_small::alias_j12) },
    EntryDef { name: "J13", params: &[], description: "J_2 + J_2", builder: Some(jordan_small::alias_j13) },
    EntryDef { name: "J24", params: &[], description: "T_3 + T_1", builder: Some(jordan_small::alias_j24) },
    EntryDef { name: "J33", params: &[], description: "same as J with n = 4", builder: Some(jordan_small::alias_j33) },
    EntryDef { name: "J58", params: &[], description: "same as T with n = 4", builder: Some(jordan_small::alias_j58) },
    EntryDef { name: "B2", params: &[], description: "axes {e1, e1+n1}", builder: None },
    EntryDef { name: "B2+F1", params: &[], description: "axes {e1, e1+n1, e2}", builder: None },
    EntryDef { name: "T5", params: &[], description: "axes {e1, (e1+e2+e3)/2}", builder: None },
    EntryDef { name: "T7", params: &[], description: "axes {e1, e1+n1, e1+n2}", builder: None },
    EntryDef { name: "T8", params: &[], description: "axes {e1, e1+n1+n2}", builder: None },
    EntryDef { name: "T10", params: &[], description: "axes {e1+n1, e2+n1}", builder: None },
    EntryDef { name: "J1", params: &[], description: "axes {e1, (e1+e2+e3)/2, e4}", builder: None },
    EntryDef { name: "J2", params: &[], description: "axes {e1+e3, e1+e4, e2}", builder: None },
    EntryDef { name: "J7", params: &[], description: "axes {e1+n1, e2+n1, e3}", builder: None },
    EntryDef { name: "J9", params: &[], description: "axes {e1, (e1+e2+e3)/2, e1+n1}", builder: None },
    EntryDef { name: "J16", params: &[], description: "axes {e1+n1, e1+n2, e2}", builder: None },
    EntryDef { name: "J18", params: &[], description: "axes {e1+n1, e1+n2, e2}", builder: None },
    EntryDef { name: "J23", params: &[], description: "axes {e1, e1+n1+n2, e2}", builder: None },
    EntryDef { name: "J48", params: &[], description: "axes {e1, e1+n1+n3, e1+n2}", builder: None },
    EntryDef { name: "J49", params: &[], description: "axes {e1, e1+n1+n3, e1+n2}", builder: None },
];

pub fn list_catalog() -> Vec<Listing> {
    REGISTRY
        .iter()
        .map(|s| Listing {
            name: s.name,
            params: s.params.iter().map(|&(name, default, integer)| ParamSlot { name, default, integer }).collect(),
            description: s.description,
            stub: s.builder.is_none(),
        })
        .collect()
}

/// Builds `name`; missing parameters take their listed defaults.
pub fn build(name: &str, params: &BTreeMap<String, Scalar>) -> Result<CatalogEntry> {
    let spec = REGISTRY
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownEntry(format!("no catalog entry `{name}`")))?;
    let builder =
        spec.builder.ok_or_else(|| Error::UnknownEntry(format!("`{name}` is a stub: product table not available")))?;
    if let Some(k) = params.keys().find(|k| !spec.params.iter().any(|p| p.0 == k.as_str())) {
        return Err(Error::InvalidParameter(format!("`{name}` has no parameter `{k}`")));
    }
    let mut values = BTreeMap::new();
    for &(p, default, integer) in spec.params {
        let v = match params.get(p) {
            Some(v) => v.clone(),
            None => Scalar::parse(default, crate::field::FieldTag::Rationals)?,
        };
        if !v.is_real() {
            return Err(Error::InvalidParameter(format!("{p} = {v} must be rational")));
        }
        if integer && to_small_int(&v).is_none_or(|k| k < 1) {
            return Err(Error::InvalidParameter(format!("{p} = {v} must be a positive integer")));
        }
        values.insert(p.to_string(), v);
    }
    builder(&Params { values })
}

/// [`build`] with the listed defaults.
pub fn build_default(name: &str) -> Result<CatalogEntry> {
    build(name, &BTreeMap::new())
}

/// Convenience for `build(name, {key: value, ...})`.
pub fn build_with(name: &str, params: &[(&str, Scalar)]) -> Result<CatalogEntry> {
    let map = params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    build(name, &map)
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn q(num: i64, den: i64) -> Scalar {
    Scalar::frac(num, den)
}

/// Law from nonzero cells, with `1⋆λ = λ` for nonzero values.
fn law(values: &[Scalar], cells: &[(&Scalar, &Scalar, &[&Scalar])]) -> Result<FusionLaw> {
    let cells: Vec<(Scalar, Scalar, Vec<Scalar>)> = cells
        .iter()
        .map(|(a, b, ts)| ((*a).clone(), (*b).clone(), ts.iter().map(|t| (*t).clone()).collect()))
        .collect();
    FusionLaw::with_unit_convention(values.to_vec(), &cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::check_axial_algebra;

    #[test]
    fn listing_has_named_entries() {
        let names: Vec<&str> = list_catalog().iter().map(|l| l.name).collect();
        for n in ["B", "C", "Monster4", "Albert", "J25", "J53", "J59", "T"] {
            assert!(names.contains(&n), "{n}");
        }
        let t = list_catalog().into_iter().find(|l| l.name == "T").unwrap();
        assert_eq!(t.params[0].name, "n");
    }

    #[test]
    fn stubs_and_bad_params_are_refused() {
        assert!(matches!(build_default("J1"), Err(Error::UnknownEntry(_))));
        assert!(matches!(build_default("nope"), Err(Error::UnknownEntry(_))));
        assert!(matches!(build_with("C", &[("alpha", q(1, 2))]), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_with("C", &[("gamma", q(7, 1))]), Err(Error::InvalidParameter(_))));
        assert!(matches!(build_with("S", &[("n", q(3, 2))]), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn every_built_entry_certifies_its_axis_sets() {
        for l in list_catalog() {
            if l.stub || l.name == "Albert" {
                continue;
            }
            let e = build_default(l.name).unwrap();
            for set in &e.axis_sets {
                if e.fact(&format!("generates:{}", set.name)) == Some("no") {
                    continue;
                }
                let law = e.law(&set.law).unwrap();
                let v = check_axial_algebra(&e.algebra, &set.axes, law).unwrap();
                assert!(v.is_certified(), "{} {}: {:?}", l.name, set.name, v.all_violations());
            }
        }
    }

    #[test]
    fn jordan_entries_satisfy_identity() {
        for name in ["S", "J", "T", "JJ", "TT", "J25", "J53", "J59", "JordanA", "JordanB", "JordanC", "JordanD"] {
            let e = build_default(name).unwrap();
            assert!(e.algebra.jordan_check().holds(), "{name}");
        }
    }
}

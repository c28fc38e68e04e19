//! Space presentations as JSON, the builtin spaces, and fixture validation.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraPresentation, GeneratorSpec, Height};
use crate::bar_ss::koszul_e2;
use crate::bounds::BoundInput;
use crate::error::{Error, Result};
use crate::steenrod::SteenrodAction;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpacePresentation {
    pub name: String,
    pub degree_cap: u32,
    pub cohomology: GeneratorList,
    #[serde(default)]
    pub steenrod: Vec<SteenrodEntry>,
    #[serde(default)]
    pub loop_homology: LoopHomology,
    #[serde(default)]
    pub permanent_cycles: Vec<String>,
    #[serde(default)]
    pub extra_generators: Vec<ExtraGenerator>,
    #[serde(default)]
    pub attestations: Vec<Attestation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundInput>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorList {
    pub generators: Vec<GeneratorSpec>,
}

/// `Sq^k gen = value`, the value a sum of monomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SteenrodEntry {
    pub gen: String,
    pub k: u32,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopHomology {
    pub generators: Vec<GeneratorSpec>,
    /// Right action on homology, `gen Sq^k = value`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub steenrod_dual: Vec<SteenrodEntry>,
}

/// A column-1 class that is not a permanent cycle but extends over a low
/// projective space, e.g. `x11` for `x1_10`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtraGenerator {
    pub name: String,
    pub koszul_class: String,
    pub degree: u32,
    pub extension_height: u32,
    /// `Sq^k` of the class, valued in the cohomology of the space.
    #[serde(default)]
    pub steenrod: Vec<ExtraSq>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtraSq {
    pub k: u32,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Attestation {
    pub claim: String,
    pub provenance: String,
}

impl SpacePresentation {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentations always serialize")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    /// A builtin name, or else a path to a JSON fixture.
    pub fn resolve(spec: &str) -> Result<Self> {
        match builtin(spec) {
            Ok(sp) => Ok(sp),
            Err(Error::UnknownBuiltin(_)) if Path::new(spec).exists() => Self::load(spec),
            Err(e) => Err(e),
        }
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn cohomology_presentation(&self) -> AlgebraPresentation {
        AlgebraPresentation::new(self.cohomology.generators.clone(), self.degree_cap)
    }

    pub fn loop_presentation(&self) -> AlgebraPresentation {
        AlgebraPresentation::new(self.loop_homology.generators.clone(), self.degree_cap)
    }

    pub fn steenrod_action(&self, algebra: &Algebra) -> Result<SteenrodAction> {
        let mut entries = Vec::new();
        for e in &self.steenrod {
            entries.push((e.gen.as_str(), e.k, algebra.parse_element(&e.value)?));
        }
        SteenrodAction::new(algebra.clone(), entries)
    }
}

pub const BUILTINS: [&str; 3] = ["spin9", "toy-trunc-poly", "unit"];

pub fn builtin(name: &str) -> Result<SpacePresentation> {
    match name {
        "spin9" => Ok(spin9()),
        "toy-trunc-poly" => Ok(toy_trunc_poly()),
        "unit" => Ok(unit()),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

fn sq(gen: &str, k: u32, value: &[&str]) -> SteenrodEntry {
    SteenrodEntry { gen: gen.into(), k, value: value.iter().map(|s| s.to_string()).collect() }
}

fn attest(claim: &str, provenance: &str) -> Attestation {
    Attestation { claim: claim.into(), provenance: provenance.into() }
}

fn spin9() -> SpacePresentation {
    SpacePresentation {
        name: "spin9".into(),
        degree_cap: 36,
        cohomology: GeneratorList {
            generators: vec![
                GeneratorSpec::new("x3", 3, Height::Finite(4)),
                GeneratorSpec::exterior("x5", 5),
                GeneratorSpec::exterior("x7", 7),
                GeneratorSpec::exterior("x15", 15),
            ],
        },
        steenrod: vec![sq("x3", 2, &["x5"]), sq("x5", 1, &["x3^2"])],
        loop_homology: LoopHomology {
            generators: vec![
                GeneratorSpec::exterior("u2", 2),
                GeneratorSpec::polynomial("u4", 4),
                GeneratorSpec::polynomial("u6", 6),
                GeneratorSpec::polynomial("u10", 10),
                GeneratorSpec::polynomial("u14", 14),
            ],
            steenrod_dual: vec![sq("u4", 2, &["u2"]), sq("u10", 2, &["u4^2"]), sq("u14", 4, &["u10"])],
        },
        permanent_cycles: vec!["x1_2".into(), "x1_4".into(), "x1_6".into(), "x1_14".into()],
        extra_generators: vec![ExtraGenerator {
            name: "x11".into(),
            koszul_class: "x1_10".into(),
            degree: 11,
            extension_height: 3,
            steenrod: vec![ExtraSq { k: 4, value: vec!["x15".into()] }],
        }],
        attestations: vec![
            attest("Sq^1 x5 is the unique degree-6 class x3^2", "mod 2 cohomology of Spin(9)"),
            attest("x1_2, x1_4, x1_6 and x1_14 are permanent cycles", "bar spectral sequence of Spin(9)"),
            attest("x11 extends over P^3 and Sq^4 x11 = x15", "dual of u14 Sq^4 = u10"),
            attest("Cat(Spin(7)) = 5", "cone decomposition of Spin(7)"),
            attest("Spin(9) -> S^15 is a principal Spin(7)-bundle over a double suspension", "Spin(7) -> Spin(9) -> S^15"),
            attest("the characteristic map compresses into F_3 with vanishing higher Hopf invariant", "pi_14 of the relevant stage vanishes"),
            attest("multiplication on Spin(7) compresses compatibly with the cone decomposition", "cone decomposition of Spin(7)"),
        ],
        bounds: vec![
            BoundInput::PrincipalBundle {
                cone_length: 5,
                compression_index: 3,
                provenance: "principal Spin(7)-bundle over S^15, Cat(Spin(7)) = 5, alpha compresses into F_3".into(),
            },
            BoundInput::StrongCategoryFallback {
                fibre_strong_category: 5,
                provenance: "Cat E <= 2 Cat G + 1 with G = Spin(7)".into(),
            },
            BoundInput::GaneaProduct {
                cat_fibre: 5,
                cat_base: 1,
                provenance: "fibration Spin(7) -> Spin(9) -> S^15".into(),
            },
        ],
    }
}

/// `F2[x3]/(x3^4)` from loop homology `Λ(u2) ⊗ F2[u10]`: the smallest input
/// on which the d3 is forced and unique.
fn toy_trunc_poly() -> SpacePresentation {
    SpacePresentation {
        name: "toy-trunc-poly".into(),
        degree_cap: 36,
        cohomology: GeneratorList { generators: vec![GeneratorSpec::new("x3", 3, Height::Finite(4))] },
        steenrod: Vec::new(),
        loop_homology: LoopHomology {
            generators: vec![GeneratorSpec::exterior("u2", 2), GeneratorSpec::polynomial("u10", 10)],
            steenrod_dual: Vec::new(),
        },
        permanent_cycles: vec!["x1_2".into()],
        extra_generators: vec![ExtraGenerator {
            name: "x11".into(),
            koszul_class: "x1_10".into(),
            degree: 11,
            extension_height: 3,
            steenrod: Vec::new(),
        }],
        attestations: Vec::new(),
        bounds: Vec::new(),
    }
}

fn unit() -> SpacePresentation {
    SpacePresentation {
        name: "unit".into(),
        degree_cap: 36,
        cohomology: GeneratorList::default(),
        steenrod: Vec::new(),
        loop_homology: LoopHomology::default(),
        permanent_cycles: Vec::new(),
        extra_generators: Vec::new(),
        attestations: vec![attest("a point has category 0", "definition")],
        bounds: vec![BoundInput::Direct {
            quantity: crate::bounds::Quantity::Cat,
            kind: crate::bounds::BoundKind::Upper,
            value: 0,
            provenance: "a point is contractible".into(),
        }],
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Structural checks that need no spectral sequence run: names resolve,
/// Steenrod data is unstable and homogeneous, loop homology is free and its
/// E2 term is large enough to converge to the cohomology.
pub fn validate(sp: &SpacePresentation) -> ValidationReport {
    let mut report = ValidationReport::default();
    let fail = |r: &mut ValidationReport, msg: String| r.failures.push(msg);

    let algebra = match Algebra::new(sp.cohomology_presentation()) {
        Ok(a) => Some(a),
        Err(e) => {
            fail(&mut report, format!("cohomology: {e}"));
            None
        }
    };
    if let Some(a) = &algebra {
        for e in &sp.steenrod {
            if a.generator_index(&e.gen).is_none() {
                fail(&mut report, format!("steenrod: unknown generator `{}`", e.gen));
            } else if let Err(err) = a.parse_element(&e.value) {
                fail(&mut report, format!("steenrod: Sq^{} {}: {err}", e.k, e.gen));
            }
        }
        if report.passed() {
            match sp.steenrod_action(a) {
                Ok(action) => {
                    for v in action.verify_instability() {
                        fail(&mut report, format!("steenrod: {v}"));
                    }
                }
                Err(err) => fail(&mut report, format!("steenrod: {err}")),
            }
        }
        for x in &sp.extra_generators {
            for s in &x.steenrod {
                match a.parse_element(&s.value) {
                    Ok(v) if !v.is_zero() && (!v.is_homogeneous() || v.degree() != Some(x.degree + s.k)) => fail(
                        &mut report,
                        format!("extra generator {}: Sq^{} value is not homogeneous of degree {}", x.name, s.k, x.degree + s.k),
                    ),
                    Ok(_) => {}
                    Err(err) => fail(&mut report, format!("extra generator {}: {err}", x.name)),
                }
            }
        }
    }

    match koszul_e2(&sp.loop_presentation()) {
        Err(e) => fail(&mut report, format!("loop homology: {e}")),
        Ok(e2) => {
            for name in sp.permanent_cycles.iter().chain(sp.extra_generators.iter().map(|x| &x.koszul_class)) {
                if e2.generator_index(name).is_none() {
                    fail(&mut report, format!("unknown Koszul generator `{name}`"));
                }
            }
            for x in &sp.extra_generators {
                if sp.permanent_cycles.contains(&x.koszul_class) {
                    fail(&mut report, format!("extra generator {} sits on a permanent cycle", x.name));
                }
                if let Some(g) = e2.generator_index(&x.koszul_class) {
                    if e2.generators()[g].total_degree() != x.degree {
                        fail(&mut report, format!("extra generator {} has degree {} but {} has total degree {}", x.name, x.degree, x.koszul_class, e2.generators()[g].total_degree()));
                    }
                }
            }
            if let Some(a) = &algebra {
                let have = e2.dims_by_total_degree();
                for (n, (&h, &e)) in a.poincare_series().iter().zip(&have).enumerate() {
                    if e < h {
                        fail(&mut report, format!("conservation: E2 has dimension {e} in degree {n}, cohomology needs {h}"));
                    }
                }
            }
        }
    }

    if let Some(a) = &algebra {
        report.warnings.extend(suspension_warnings(sp, a));
    }
    report
}

/// Compares the dual loop action with the cohomology action through the
/// suspension `u_d -> x_(d+1)`, on entries whose value is a single generator.
fn suspension_warnings(sp: &SpacePresentation, a: &Algebra) -> Vec<String> {
    let Ok(action) = sp.steenrod_action(a) else { return Vec::new() };
    let suspend = |loop_gen: &str| -> Option<String> {
        let d = sp.loop_homology.generators.iter().find(|g| g.name == loop_gen)?.degree;
        if let Some(x) = sp.extra_generators.iter().find(|x| x.degree == d + 1) {
            return Some(x.name.clone());
        }
        a.generators().iter().find(|g| g.degree == d + 1).map(|g| g.name.clone())
    };
    let mut out = Vec::new();
    for e in &sp.loop_homology.steenrod_dual {
        let [value] = e.value.as_slice() else { continue };
        if value.contains(['*', '^']) {
            continue;
        }
        let (Some(target), Some(source)) = (suspend(&e.gen), suspend(value)) else {
            out.push(format!("loop action {} Sq^{} = {value} has no suspension counterpart", e.gen, e.k));
            continue;
        };
        let holds = if let Some(x) = sp.extra_generators.iter().find(|x| x.name == source) {
            x.steenrod.iter().any(|s| s.k == e.k && s.value.contains(&target))
        } else {
            let g = a.generator_index(&source).expect("found by degree");
            let t = a.parse_monomial(&target).expect("generator name");
            action.on_generator(g, e.k).terms().contains(&t)
        };
        if !holds {
            out.push(format!("loop action {} Sq^{} = {value} suggests Sq^{} {source} ∋ {target}, which the table lacks", e.gen, e.k, e.k));
        }
    }
    out
}

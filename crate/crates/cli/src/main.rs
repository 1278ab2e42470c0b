//! `axial`: command-line front end for axial-core.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use axial_core::algfile::{self, AlgebraFile};
use axial_core::catalog::{self, AxisSet};
use axial_core::extension::{
    cocycle_space_with, decompose_by_annihilator, extension_axiality, is_split, vanishing_rows,
};
use axial_core::miyamoto::{axis_closure, find_flip, group_closure, is_s3_presentation, tau_automorphism};
use axial_core::reproduce::{self, Options, BUNDLES};
use axial_core::spectral::{check_axial_algebra, eigen_decompose, minimal_law};
use axial_core::{C2Grading, Element, Error, FieldTag, FusionLaw, Result, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod input;
mod render;

use input::{Loaded, Source};
use render::*;

#[derive(Parser, Debug)]
#[command(name = "axial", version, about = "Exact checks for axial algebras and their central extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[command(flatten)]
    source: Source,
    /// Axis set name, or comma-separated element names / basis labels
    #[arg(long)]
    axes: Option<String>,
    /// Fusion law name (defaults to the axis set's law)
    #[arg(long)]
    law: Option<String>,
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug, Clone)]
struct Plain {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MiyamotoMode {
    /// Closure of the group generated by the Miyamoto involutions
    Group,
    /// Closure of the axis set under its Miyamoto involutions
    Axes,
    /// Automorphism exchanging the first two axes
    Flip,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify that the axes generate and obey the fusion law
    CheckAxial(Common),
    /// Eigenvalues and eigenspace dimensions of each axis
    Spectrum(Common),
    /// Smallest fusion law the axes satisfy; compared with --law when given
    FusionMin(Common),
    /// Space of Frobenius forms; checks the listed form when there is one
    Frobenius(Plain),
    /// Radical of the axial algebra
    Radical(Common),
    /// Jordan identity on the whole algebra
    Jordan(Plain),
    /// Cocycle space relative to the axes, with coboundaries and quotient
    Cocycles {
        #[command(flatten)]
        common: Common,
        /// Also impose theta(x,x) = 0 for these elements (`axes`, `basis`, or names)
        #[arg(long)]
        vanish: Option<String>,
    },
    /// Build the central extension by a cocycle and check its axiality
    Extend {
        #[command(flatten)]
        common: Common,
        /// Cocycle name in the input
        #[arg(long)]
        cocycle: Option<String>,
        /// Write the extension as an algebra file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Whether the extension by a cocycle splits
    Split {
        #[command(flatten)]
        plain: Plain,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Split an algebra along its annihilator into a base algebra and a cocycle
    Decompose {
        #[command(flatten)]
        common: Common,
        /// Write the base algebra with its cocycle as an algebra file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Miyamoto involutions: group closure, axis closure or flips
    Miyamoto {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "group")]
        mode: MiyamotoMode,
        /// Minus part of the grading, comma-separated
        #[arg(long)]
        minus: Option<String>,
        /// Stop closures past this many elements
        #[arg(long, default_value_t = 200)]
        cap: usize,
    },
    /// List the catalog, or print one entry as an algebra file
    Catalog {
        name: Option<String>,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Replay a bundle of reference checks (`all` runs every bundle)
    Reproduce {
        bundle: String,
        /// Include the 27-dim case in jordan-simple
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Result of a command: `ok == false` maps to exit code 1.
struct Outcome {
    ok: bool,
    text: Vec<String>,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = match &cli.command {
        Command::CheckAxial(c) | Command::Spectrum(c) | Command::FusionMin(c) | Command::Radical(c) => c.json,
        Command::Cocycles { common, .. }
        | Command::Extend { common, .. }
        | Command::Decompose { common, .. }
        | Command::Miyamoto { common, .. } => common.json,
        Command::Frobenius(p) | Command::Jordan(p) | Command::Split { plain: p, .. } => p.json,
        Command::Catalog { json, .. } | Command::Reproduce { json, .. } => *json,
    };
    match run(cli.command) {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            let _ = if as_json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("serializable"))
            } else {
                out.text.iter().try_for_each(|line| writeln!(stdout, "{line}"))
            };
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::CheckAxial(c) => check_axial(&c),
        Command::Spectrum(c) => spectrum(&c),
        Command::FusionMin(c) => fusion_min(&c),
        Command::Frobenius(p) => frobenius(&p),
        Command::Radical(c) => radical(&c),
        Command::Jordan(p) => jordan(&p),
        Command::Cocycles { common, vanish } => cocycles(&common, vanish.as_deref()),
        Command::Extend { common, cocycle, output } => extend(&common, cocycle.as_deref(), output.as_ref()),
        Command::Split { plain, cocycle } => split(&plain, cocycle.as_deref()),
        Command::Decompose { common, output } => decompose(&common, output.as_ref()),
        Command::Miyamoto { common, mode, minus, cap } => miyamoto(&common, mode, minus.as_deref(), cap),
        Command::Catalog { name, params, json: _ } => catalog_cmd(name.as_deref(), &params),
        Command::Reproduce { bundle, extended, json: _ } => reproduce_cmd(&bundle, extended),
    }
}

/// Loads the algebra with its axes and law.
fn setup(c: &Common) -> Result<(Loaded, Vec<Element>, String, FusionLaw)> {
    let loaded = c.source.load()?;
    let (axes, set_law) = loaded.axes(c.axes.as_deref())?;
    let (name, law) = loaded.law(c.law.as_deref(), set_law.as_deref())?;
    Ok((loaded, axes, name, law))
}

fn header(l: &Loaded) -> String {
    format!(
        "algebra: dim {} over {}, basis {}",
        l.algebra.dim(),
        l.algebra.field().name(),
        l.algebra.labels().join(" ")
    )
}

fn check_axial(c: &Common) -> Result<Outcome> {
    let (l, axes, law_name, law) = setup(c)?;
    let alg = &l.algebra;
    let v = check_axial_algebra(alg, &axes, &law)?;
    let mut text = vec![header(&l), format!("law {law_name}: {}", law_text(&law))];
    for r in &v.reports {
        text.push(format!(
            "axis {}: spectrum {}; primitive {}; {}",
            alg.format_element(&r.eigen.element),
            spectrum_text(&r.eigen),
            if r.primitive { "yes" } else { "no" },
            if r.is_axis() { "axis" } else { "NOT an axis" }
        ));
        for viol in &r.violations {
            text.push(format!("  violation: {}", violation_text(alg, viol)));
        }
    }
    text.push(format!("closure: dim {} (words of length <= {})", v.closure.span.dim(), v.closure.max_word_length));
    for viol in &v.violations {
        text.push(format!("violation: {}", violation_text(alg, viol)));
    }
    text.push(format!("verdict: {}", if v.is_certified() { "certified" } else { "not axial" }));
    let json = json!({
        "command": "check-axial",
        "law": law_name,
        "fusion_law": law_json(&law),
        "axes": v.reports.iter().map(|r| axis_json(alg, r)).collect::<Vec<_>>(),
        "closure_dim": v.closure.span.dim(),
        "max_word_length": v.closure.max_word_length,
        "primitive": v.all_primitive(),
        "violations": v.violations.iter().map(|x| violation_json(alg, x)).collect::<Vec<_>>(),
        "certified": v.is_certified(),
    });
    Ok(Outcome { ok: v.is_certified(), text, json })
}

fn spectrum(c: &Common) -> Result<Outcome> {
    let l = c.source.load()?;
    let (axes, _) = l.axes(c.axes.as_deref())?;
    let alg = &l.algebra;
    let mut text = vec![header(&l)];
    let mut items = Vec::new();
    for a in &axes {
        let e = eigen_decompose(alg, a, &[])?;
        text.push(format!(
            "{}: {}{}{}",
            alg.format_element(a),
            spectrum_text(&e),
            if e.semisimple { "" } else { "; not semisimple" },
            if e.undetermined { "; some eigenvalues outside the field" } else { "" }
        ));
        items.push(eigen_json(alg, &e));
    }
    Ok(Outcome { ok: true, text, json: json!({ "command": "spectrum", "elements": items }) })
}

fn fusion_min(c: &Common) -> Result<Outcome> {
    let l = c.source.load()?;
    let (axes, _) = l.axes(c.axes.as_deref())?;
    let got = minimal_law(&l.algebra, &axes)?;
    let mut text = vec![format!("minimal law: {}", law_text(&got))];
    let mut json = json!({ "command": "fusion-min", "minimal_law": law_json(&got) });
    let mut ok = true;
    if let Some(name) = &c.law {
        let (_, want) = l.law(Some(name), None)?;
        let equal = got == want;
        let contained = axial_core::fusion::law_contains(&got, &want);
        ok = equal;
        text.push(format!("law {name}: {}", law_text(&want)));
        text.push(format!("equal: {}; contained: {}", yes(equal), yes(contained)));
        json["compared_with"] = json!(name);
        json["equal"] = json!(equal);
        json["contained"] = json!(contained);
    }
    Ok(Outcome { ok, text, json })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn frobenius(p: &Plain) -> Result<Outcome> {
    let l = p.source.load()?;
    let alg = &l.algebra;
    let n = alg.dim();
    let forms = alg.frobenius_space();
    let uppers: Vec<Vec<Scalar>> = forms.iter().map(|f| f.to_upper()).collect();
    let space = axial_core::Subspace::from_vectors(n * (n + 1) / 2, alg.field(), uppers.clone())?;
    let mut text = vec![header(&l), format!("Frobenius forms: dimension {}", forms.len())];
    for f in &forms {
        text.push(format!("  gram rows {:?}", f.gram().to_rows()));
    }
    let mut json = json!({
        "command": "frobenius",
        "dim": forms.len(),
        "basis_upper": uppers.iter().map(|u| scalars(u)).collect::<Vec<_>>(),
    });
    let mut ok = true;
    if let Some(listed) = &l.frobenius {
        ok = space.contains(&listed.to_upper())?;
        text.push(format!("listed form {:?}: {}", listed.gram().to_rows(), if ok { "member" } else { "NOT a member" }));
        json["listed_upper"] = scalars(&listed.to_upper());
        json["listed_member"] = json!(ok);
    }
    Ok(Outcome { ok, text, json })
}

fn radical(c: &Common) -> Result<Outcome> {
    let l = c.source.load()?;
    let (axes, _) = l.axes(c.axes.as_deref())?;
    let alg = &l.algebra;
    let (r, method) = match alg.radical_axial(&axes) {
        Ok((r, _)) => (r, "frobenius"),
        Err(Error::RadicalUnavailable(why)) if alg.dim() == 2 => {
            let _ = why;
            (reproduce::radical_two_dim(alg, &axes)?, "ideal-enumeration")
        }
        Err(e) => return Err(e),
    };
    let text = vec![header(&l), format!("radical: {} (dim {}, via {method})", subspace_text(alg, &r), r.dim())];
    let json = json!({ "command": "radical", "radical": subspace_json(&r), "method": method });
    Ok(Outcome { ok: true, text, json })
}

fn jordan(p: &Plain) -> Result<Outcome> {
    let l = p.source.load()?;
    let alg = &l.algebra;
    let v = alg.jordan_check();
    let (line, json) = match &v {
        axial_core::algebra::JordanVerdict::Holds => {
            ("Jordan identity holds".to_string(), json!({ "command": "jordan", "holds": true }))
        }
        axial_core::algebra::JordanVerdict::Counterexample { indices, defect } => {
            let names: Vec<&str> = indices.iter().map(|&i| alg.labels()[i].as_str()).collect();
            (
                format!("Jordan identity fails at {:?}, defect {}", names, alg.format_element(defect)),
                json!({ "command": "jordan", "holds": false, "witness": names, "defect": alg.format_element(defect) }),
            )
        }
    };
    Ok(Outcome { ok: v.holds(), text: vec![header(&l), line], json })
}

fn vanish_elements(l: &Loaded, axes: &[Element], spec: &str) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim) {
        match part {
            "axes" => out.extend(axes.iter().cloned()),
            "basis" => out.extend((0..l.algebra.dim()).map(|i| l.algebra.basis_element(i))),
            name => out.push(l.element(name)?),
        }
    }
    Ok(out)
}

fn cocycles(c: &Common, vanish: Option<&str>) -> Result<Outcome> {
    let (l, axes, law_name, law) = setup(c)?;
    let alg = &l.algebra;
    let extra = match vanish {
        Some(spec) => vanishing_rows(alg, &vanish_elements(&l, &axes, spec)?),
        None => Vec::new(),
    };
    let cs = cocycle_space_with(alg, &axes, &law, &extra)?;
    let reps = cs.representative_cocycles();
    let basis = cs.basis_cocycles();
    let mut text = vec![
        header(&l),
        format!("law {law_name}; {} axes; {} extra rows", axes.len(), extra.len()),
        format!(
            "dim Z {}, dim B {}, dim Z∩B {}, quotient dim {}",
            cs.z.dim(),
            cs.b.dim(),
            cs.z_cap_b.dim(),
            cs.quotient_dim
        ),
    ];
    for (k, t) in basis.iter().enumerate() {
        text.push(format!("Z basis {}: {}", k + 1, cocycle_text(alg, t)));
    }
    for (k, t) in reps.iter().enumerate() {
        text.push(format!("class representative {}: {}", k + 1, cocycle_text(alg, t)));
    }
    let json = json!({
        "command": "cocycles",
        "law": law_name,
        "dim_z": cs.z.dim(),
        "dim_b": cs.b.dim(),
        "dim_z_cap_b": cs.z_cap_b.dim(),
        "quotient_dim": cs.quotient_dim,
        "z_basis": basis.iter().map(|t| cocycle_json(alg, t)).collect::<Vec<_>>(),
        "representatives": reps.iter().map(|t| cocycle_json(alg, t)).collect::<Vec<_>>(),
    });
    Ok(Outcome { ok: true, text, json })
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn extend(c: &Common, cocycle: Option<&str>, output: Option<&PathBuf>) -> Result<Outcome> {
    let (l, axes, law_name, law) = setup(c)?;
    let alg = &l.algebra;
    let (theta_name, theta) = l.cocycle(cocycle)?;
    let r = extension_axiality(alg, &theta, &axes, &law)?;
    let ext = &r.extension;
    let mut text = vec![
        header(&l),
        format!("cocycle {theta_name}: {}", cocycle_text(alg, &theta)),
        format!("extension: dim {}, basis {}", ext.dim(), ext.labels().join(" ")),
    ];
    for (a, ok) in axes.iter().zip(&r.condition1) {
        text.push(format!("condition (1) at {}: {}", alg.format_element(a), if *ok { "holds" } else { "FAILS" }));
    }
    text.push(format!("lifted axes generate: {}", yes(r.generates)));
    if let Some(law_ext) = &r.induced_law {
        text.push(format!("induced law: {}", law_text(law_ext)));
    }
    if let Some(w) = r.law_within_original {
        text.push(format!("induced law within {law_name} + {{0}}: {}", yes(w)));
    }
    text.push(format!("axial: {}", yes(r.axial)));
    text.push(format!("theta in Z: {}", yes(r.theta_in_z)));
    text.push(format!("split: {}", split_text(&r.split)));
    if let Some(path) = output {
        let mut file = AlgebraFile {
            algebra: ext.clone(),
            elements: Vec::new(),
            axis_sets: Vec::new(),
            laws: Vec::new(),
            cocycles: Vec::new(),
        };
        if let Some(law_ext) = &r.induced_law {
            file.laws.push(("induced".into(), law_ext.clone()));
            file.axis_sets.push(AxisSet { name: "lifted".into(), axes: r.lifted_axes.clone(), law: "induced".into() });
        }
        write_file(path, &algfile::render(&file))?;
        text.push(format!("wrote {}", path.display()));
    }
    let json = json!({
        "command": "extend",
        "cocycle": cocycle_json(alg, &theta),
        "extension_dim": ext.dim(),
        "lifted_axes": r.lifted_axes.iter().map(|a| ext.format_element(a)).collect::<Vec<_>>(),
        "condition1": r.condition1,
        "generates": r.generates,
        "induced_law": r.induced_law.as_ref().map(law_json),
        "law_within_original": r.law_within_original,
        "axial": r.axial,
        "theta_in_z": r.theta_in_z,
        "split": split_json(&r.split),
    });
    Ok(Outcome { ok: r.axial, text, json })
}

fn split(p: &Plain, cocycle: Option<&str>) -> Result<Outcome> {
    let l = p.source.load()?;
    let (name, theta) = l.cocycle(cocycle)?;
    let v = is_split(&l.algebra, &theta)?;
    let text = vec![
        format!("cocycle {name}: {}", cocycle_text(&l.algebra, &theta)),
        format!("extension is {}", split_text(&v)),
    ];
    Ok(Outcome { ok: true, text, json: json!({ "command": "split", "result": split_json(&v) }) })
}

fn decompose(c: &Common, output: Option<&PathBuf>) -> Result<Outcome> {
    let l = c.source.load()?;
    let axes = match &c.axes {
        Some(spec) => l.axes(Some(spec))?.0,
        None => Vec::new(),
    };
    let d = decompose_by_annihilator(&l.algebra, &axes)?;
    let base = &d.algebra;
    let file = AlgebraFile {
        algebra: base.clone(),
        elements: Vec::new(),
        axis_sets: if axes.is_empty() {
            Vec::new()
        } else {
            vec![AxisSet { name: "projected".into(), axes: d.axes.clone(), law: String::new() }]
        },
        laws: Vec::new(),
        cocycles: vec![("theta".into(), d.cocycle.clone())],
    };
    let mut text = vec![
        header(&l),
        format!("annihilator dim {}; base algebra dim {}", l.algebra.dim() - base.dim(), base.dim()),
        format!("cocycle: {}", cocycle_text(base, &d.cocycle)),
        format!("rebuilt equals input: {}", yes(d.rebuilt_equal)),
    ];
    for a in &d.axes {
        text.push(format!("projected axis: {}", base.format_element(a)));
    }
    if let Some(path) = output {
        // the projected set has no law attached, so only the algebra and cocycle are written
        let mut plain = file.clone();
        plain.axis_sets.clear();
        write_file(path, &algfile::render(&plain))?;
        text.push(format!("wrote {}", path.display()));
    }
    let json = json!({
        "command": "decompose",
        "base_dim": base.dim(),
        "base_labels": base.labels(),
        "cocycle": cocycle_json(base, &d.cocycle),
        "projected_axes": d.axes.iter().map(|a| base.format_element(a)).collect::<Vec<_>>(),
        "rebuilt_equal": d.rebuilt_equal,
    });
    Ok(Outcome { ok: d.rebuilt_equal, text, json })
}

fn grading_for(l: &Loaded, law_name: &str, law: &FusionLaw, minus: Option<&str>) -> Result<C2Grading> {
    let parse = |s: &str| -> Result<Vec<Scalar>> {
        s.split(',').map(|x| Scalar::parse(x.trim(), FieldTag::GaussianRationals)).collect()
    };
    if let Some(m) = minus {
        return C2Grading::with_minus(law, &parse(m)?);
    }
    if let Some(m) = l.fact(&format!("grading:{law_name}")) {
        return C2Grading::with_minus(law, &parse(m)?);
    }
    let nontrivial: Vec<C2Grading> = law.find_c2_gradings()?.into_iter().filter(|g| !g.is_trivial()).collect();
    match nontrivial.as_slice() {
        [g] => Ok(g.clone()),
        [] => Err(Error::Precondition(format!("law {law_name} has no nontrivial C2-grading"))),
        _ => Err(Error::Precondition(format!("law {law_name} has several C2-gradings; choose one with --minus"))),
    }
}

fn matrix_json(m: &axial_core::Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| scalars(r)).collect())
}

fn miyamoto(c: &Common, mode: MiyamotoMode, minus: Option<&str>, cap: usize) -> Result<Outcome> {
    let l = c.source.load()?;
    let (axes, set_law) = l.axes(c.axes.as_deref())?;
    let alg = &l.algebra;
    let mut text = vec![header(&l)];
    match mode {
        MiyamotoMode::Flip => {
            let [a1, a2, ..] = axes.as_slice() else {
                return Err(Error::Precondition("flip needs two axes".into()));
            };
            let flip = find_flip(alg, a1, a2)?;
            text.push(format!(
                "flip exchanging {} and {}: {}",
                alg.format_element(a1),
                alg.format_element(a2),
                if flip.is_some() { "found" } else { "none" }
            ));
            if let Some(f) = &flip {
                text.push(format!("  matrix rows {:?}", f.matrix.to_rows()));
            }
            let json = json!({
                "command": "miyamoto",
                "mode": "flip",
                "found": flip.is_some(),
                "matrix": flip.as_ref().map(|f| matrix_json(&f.matrix)),
            });
            Ok(Outcome { ok: flip.is_some(), text, json })
        }
        MiyamotoMode::Group => {
            let (law_name, law) = l.law(c.law.as_deref(), set_law.as_deref())?;
            let g = grading_for(&l, &law_name, &law, minus)?;
            let gens = axes
                .iter()
                .map(|a| tau_automorphism(alg, a, &law, &g).map(|t| t.matrix))
                .collect::<Result<Vec<_>>>()?;
            let cl = group_closure(&gens, cap)?;
            let s3 = is_s3_presentation(&cl);
            text.push(format!("grading minus part {}", set_text(&g.minus)));
            match cl.order() {
                Some(o) => text.push(format!("group order {o}{}", if s3 { " (S3 on two involutions)" } else { "" })),
                None => text.push(format!("closure not completed within cap {cap}")),
            }
            let json = json!({
                "command": "miyamoto",
                "mode": "group",
                "minus": scalars(&g.minus),
                "completed": cl.completed,
                "order": cl.order(),
                "elements_found": cl.elements.len(),
                "cap": cap,
                "s3": s3,
            });
            Ok(Outcome { ok: true, text, json })
        }
        MiyamotoMode::Axes => {
            let (law_name, law) = l.law(c.law.as_deref(), set_law.as_deref())?;
            let g = grading_for(&l, &law_name, &law, minus)?;
            let cl = axis_closure(alg, &axes, &law, &g, cap)?;
            text.push(format!("grading minus part {}", set_text(&g.minus)));
            text.push(format!(
                "axis closure {}: {} axes",
                if cl.completed { "completed" } else { "not completed within cap" },
                cl.axes.len()
            ));
            for a in &cl.axes {
                text.push(format!("  {}", alg.format_element(a)));
            }
            let json = json!({
                "command": "miyamoto",
                "mode": "axes",
                "minus": scalars(&g.minus),
                "completed": cl.completed,
                "cap": cap,
                "axes": cl.axes.iter().map(|a| alg.format_element(a)).collect::<Vec<_>>(),
            });
            Ok(Outcome { ok: true, text, json })
        }
    }
}

fn catalog_cmd(name: Option<&str>, params: &[String]) -> Result<Outcome> {
    let Some(name) = name else {
        let list = catalog::list_catalog();
        let text = list
            .iter()
            .map(|l| format!("{:<12} {}{}", l.signature(), l.description, if l.stub { " [stub]" } else { "" }))
            .collect();
        let json = json!({
            "command": "catalog",
            "entries": list.iter().map(|l| json!({
                "name": l.name,
                "signature": l.signature(),
                "params": l.params.iter().map(|p| json!({ "name": p.name, "default": p.default, "integer": p.integer })).collect::<Vec<_>>(),
                "description": l.description,
                "stub": l.stub,
            })).collect::<Vec<_>>(),
        });
        return Ok(Outcome { ok: true, text, json });
    };
    let e = catalog::build(name, &input::parse_params(params)?)?;
    let file_text = algfile::render(&AlgebraFile::from(&e));
    let text = file_text.lines().map(str::to_string).collect();
    let json = json!({
        "command": "catalog",
        "name": e.name,
        "params": e.params.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
        "dim": e.algebra.dim(),
        "field": e.algebra.field().name(),
        "labels": e.algebra.labels(),
        "axis_sets": e.axis_sets.iter().map(|s| json!({ "name": s.name, "law": s.law, "size": s.axes.len() })).collect::<Vec<_>>(),
        "facts": e.facts.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<serde_json::Map<_, _>>(),
        "file": file_text,
    });
    Ok(Outcome { ok: true, text, json })
}

fn reproduce_cmd(bundle: &str, extended: bool) -> Result<Outcome> {
    let names: Vec<&str> = if bundle == "all" { BUNDLES.to_vec() } else { vec![bundle] };
    let opts = Options { extended };
    let mut text = Vec::new();
    let mut bundles = Vec::new();
    let (mut passed, mut failed) = (0usize, 0usize);
    for b in names {
        let checks = reproduce::run(b, &opts)?;
        for c in &checks {
            if c.pass {
                passed += 1;
            } else {
                failed += 1;
            }
            text.push(format!("[{b}] {c}"));
        }
        bundles.push(json!({
            "bundle": b,
            "checks": checks.iter().map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail })).collect::<Vec<_>>(),
        }));
    }
    text.push(format!("{passed} passed, {failed} failed"));
    let json = json!({ "command": "reproduce", "bundles": bundles, "passed": passed, "failed": failed });
    Ok(Outcome { ok: failed == 0, text, json })
}

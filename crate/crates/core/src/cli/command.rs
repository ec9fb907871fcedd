use clap::Subcommand;

use super::model::{int_matrix_display, ModelFile};
use super::report::{Block, Report};
use crate::error::{Error, Result};
use crate::gorenstein::{
    ext_module, g_class_test, gpd_polynomial_compare, CertifiedBy, GClassReport, GVerdict,
};
use crate::kgroups::{euler_class, group_from_relations, smith_normal_form, Catalog};
use crate::module::{double_dual_map, module_rank, FPModule, Matrix, PolynomialExtension};
use crate::resolution::{
    free_resolution, pd_from_resolution, self_annihilator_certificate, truncation_sequence,
    FreeResolution, SelfAnnihilatorOutcome,
};
use crate::ring::{Poly, QuotRing};

/// One computation on named objects of a model file.
#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Groebner basis of a ring's modulus, or canonical generators of a submodule
    Gb { name: String },
    /// Normal form of an element
    Nf { ring: String, element: String },
    /// Annihilator ideal of an element
    Ann { ring: String, element: String },
    /// Free resolution up to --depth maps
    Resolve { module: String },
    /// Projective dimension verdict from a resolution of length --depth
    Pd { module: String },
    /// Ext^INDEX(MODULE, TARGET); TARGET defaults to the ring itself
    Ext {
        module: String,
        index: usize,
        target: Option<String>,
    },
    /// Dual module and the double-duality map
    Dual { module: String },
    /// The three G-class conditions checked up to --depth
    Gclass { module: String },
    /// Gorenstein projective dimension at most N, compared with M[y]
    Gpd { module: String, n: usize },
    /// Certify that (a) is its own annihilator and resolve it
    Lemma45 { ring: String, element: String },
    /// Truncation sequence 0 -> A[x] -> B[x] -> M -> 0 of a submodule
    Lemma312 { submodule: String, var: String },
    /// Class in the Grothendieck group of a catalog ring
    K0 { module: String },
    /// Smith normal form of an integer matrix
    Snf { matrix: String },
    /// Run every task of the model file
    Report,
}

impl Command {
    pub fn words(&self) -> Vec<String> {
        let s = |x: &str| x.to_string();
        match self {
            Command::Gb { name } => vec![s("gb"), name.clone()],
            Command::Nf { ring, element } => vec![s("nf"), ring.clone(), element.clone()],
            Command::Ann { ring, element } => vec![s("ann"), ring.clone(), element.clone()],
            Command::Resolve { module } => vec![s("resolve"), module.clone()],
            Command::Pd { module } => vec![s("pd"), module.clone()],
            Command::Ext { module, index, target } => {
                let mut w = vec![s("ext"), module.clone(), index.to_string()];
                w.extend(target.iter().cloned());
                w
            }
            Command::Dual { module } => vec![s("dual"), module.clone()],
            Command::Gclass { module } => vec![s("gclass"), module.clone()],
            Command::Gpd { module, n } => vec![s("gpd"), module.clone(), n.to_string()],
            Command::Lemma45 { ring, element } => vec![s("lemma45"), ring.clone(), element.clone()],
            Command::Lemma312 { submodule, var } => vec![s("lemma312"), submodule.clone(), var.clone()],
            Command::K0 { module } => vec![s("k0"), module.clone()],
            Command::Snf { matrix } => vec![s("snf"), matrix.clone()],
            Command::Report => vec![s("report")],
        }
    }

    /// Resolves every reference without computing anything.
    pub fn validate(&self, model: &ModelFile) -> Result<()> {
        match self {
            Command::Gb { name } => {
                if model.ring(name).is_err() && model.submodule(name).is_err() {
                    return Err(Error::Model(format!("unknown ring or submodule `{name}`")));
                }
            }
            Command::Nf { ring, element } | Command::Ann { ring, element } | Command::Lemma45 { ring, element } => {
                model.element(ring, element)?;
            }
            Command::Resolve { module }
            | Command::Pd { module }
            | Command::Dual { module }
            | Command::Gclass { module }
            | Command::Gpd { module, .. }
            | Command::K0 { module } => {
                model.module(module)?;
            }
            Command::Ext { module, target, .. } => {
                let m = model.module(module)?;
                if let Some(t) = target {
                    if model.module(t)?.ring() != m.ring() {
                        return Err(Error::Model(format!("`{module}` and `{t}` live over different rings")));
                    }
                }
            }
            Command::Lemma312 { submodule, var } => {
                let s = model.submodule(submodule)?;
                if s.ring().base().var_index(var).is_none() {
                    return Err(Error::Model(format!("`{var}` is not a variable of the ring of `{submodule}`")));
                }
            }
            Command::Snf { matrix } => {
                model.intmatrix(matrix)?;
            }
            Command::Report => {}
        }
        Ok(())
    }

    /// Runs a single computation. `report` is handled by the caller.
    pub fn run(&self, model: &ModelFile, depth: usize) -> Result<Report> {
        self.validate(model)?;
        let mut body = Block::new();
        body.kv("command", self.words().join(" "));
        let mut rejected = false;
        let summary = match self {
            Command::Gb { name } => {
                if let Ok(r) = model.ring(name) {
                    body.kv("ring", r.as_ref());
                    body.kv("generators", ideal_display(r, r.modulus().generators()));
                    body.kv("groebner_basis", ideal_display(r, r.modulus().groebner_basis()));
                    if let Some(s) = r.standard_monomials() {
                        body.kv("dimension", s.len());
                    }
                    format!("GB({name}) = {}", ideal_display(r, r.modulus().groebner_basis()))
                } else {
                    let s = model.submodule(name)?.interreduced()?;
                    let m = Matrix::from_columns(s.rank(), s.generators().to_vec())?;
                    body.kv("rank", s.rank());
                    body.kv("generators", s.generators().len());
                    body.kv("basis", m.display(s.ring()));
                    format!("GB({name}) = {}", m.display(s.ring()))
                }
            }
            Command::Nf { ring, element } => {
                let r = model.ring(ring)?;
                let f = model.element(ring, element)?;
                let nf = r.normal_form(&f)?;
                body.kv("ring", r.as_ref()).kv("input", element).kv("normal_form", r.display(&nf));
                format!("nf({element}) = {}", r.display(&nf))
            }
            Command::Ann { ring, element } => {
                let r = model.ring(ring)?;
                let a = model.element(ring, element)?;
                let ann = r.annihilator(&a)?;
                let shown = ideal_display(r, ann.generators());
                body.kv("ring", r.as_ref()).kv("element", r.display(&r.normal_form(&a)?)).kv("annihilator", &shown);
                format!("ann({element}) = {shown}")
            }
            Command::Resolve { module } => {
                let m = model.module(module)?;
                let res = free_resolution(m, depth)?;
                body.block("module", module_block(m));
                body.kv("depth", depth);
                resolution_block(&mut body, &res);
                format!(
                    "resolution of {module}: length {}, periodicity {}",
                    res.len(),
                    periodicity(res.periodicity)
                )
            }
            Command::Pd { module } => {
                let m = model.module(module)?;
                let res = free_resolution(m, depth)?;
                let verdict = pd_from_resolution(&res)?;
                body.kv("verdict", verdict).kv("depth", depth);
                body.kv("length", res.len());
                body.kv("terminated", res.terminated);
                body.kv("verified_depth", res.verified_depth);
                body.kv("periodicity", periodicity(res.periodicity));
                format!("pd({module}) = {verdict}")
            }
            Command::Ext { module, index, target } => {
                let m = model.module(module)?;
                let (tname, n) = match target {
                    Some(t) => (t.clone(), model.module(t)?.clone()),
                    None => ("R".to_string(), FPModule::free(m.ring().clone(), 1)),
                };
                let e = ext_module(m, &n, *index)?;
                body.kv("degree", index).kv("target", &tname).kv("is_zero", e.is_zero);
                body.kv("length", length(&e.module)?);
                body.block("presentation", module_block(&e.module));
                if e.is_zero {
                    format!("Ext^{index}({module}, {tname}) = 0")
                } else {
                    format!("Ext^{index}({module}, {tname}) != 0, length {}", length(&e.module)?)
                }
            }
            Command::Dual { module } => {
                let m = model.module(module)?;
                let d = double_dual_map(m)?;
                let mut dual = module_block(&d.dual.module);
                dual.kv("evaluation", d.dual.evaluation.display(m.ring()));
                body.block("dual", dual);
                let mut double = module_block(&d.double.module);
                double.kv("evaluation", d.double.evaluation.display(m.ring()));
                body.block("double_dual", double);
                body.kv("mu", d.map.matrix().display(m.ring()));
                body.kv("mu_verdict", d.verdict.name());
                format!("{module}* has {} generators; mu is {}", d.dual.module.ngens(), d.verdict.name())
            }
            Command::Gclass { module } => {
                let m = model.module(module)?;
                let report = g_class_test(m, depth)?;
                gclass_block(&mut body, &report)?;
                format!("{module}: {}", g_verdict(&report.verdict))
            }
            Command::Gpd { module, n } => {
                let m = model.module(module)?;
                let c = gpd_polynomial_compare(m, *n, depth)?;
                body.kv("bound", n).kv("depth", depth);
                body.kv("verdict", &c.base);
                body.kv("extension_variable", &c.extension_variable);
                body.kv("extension_verdict", &c.extension);
                body.kv("agree", c.base.to_string() == c.extension.to_string());
                format!(
                    "gpd({module}) = {}; gpd({module}[{}]) = {}",
                    c.base, c.extension_variable, c.extension
                )
            }
            Command::Lemma45 { ring, element } => {
                let r = model.ring(ring)?;
                let a = model.element(ring, element)?;
                match self_annihilator_certificate(r, &a, depth.max(2))? {
                    SelfAnnihilatorOutcome::Accepted(cert) => {
                        let shown = r.display(&cert.element);
                        body.kv("accepted", true).kv("element", &shown);
                        body.block("ideal", module_block(&cert.ideal));
                        body.kv("verdict", cert.verdict);
                        resolution_block(&mut body, &cert.resolution);
                        format!("({shown}) is its own annihilator; pd = {}", cert.verdict)
                    }
                    SelfAnnihilatorOutcome::Rejected(failed) => {
                        rejected = true;
                        let list: Vec<String> = failed.iter().map(|c| c.to_string()).collect();
                        body.kv("accepted", false).kv("failed", list.join("; "));
                        format!("rejected: {}", list.join("; "))
                    }
                }
            }
            Command::Lemma312 { submodule, var } => {
                let s = model.submodule(submodule)?;
                let ext = PolynomialExtension::from_variable(s.ring(), var)?;
                let seq = truncation_sequence(s, &ext)?;
                let base = ext.base();
                body.kv("base_ring", base.as_ref()).kv("variable", var).kv("k", seq.k);
                for (key, sub, module) in [("a", &seq.a, &seq.a_module), ("b", &seq.b, &seq.b_module)] {
                    let mut blk = Block::new();
                    blk.kv("ambient_rank", sub.rank());
                    blk.kv("generators", sub.generators().len());
                    blk.kv("is_zero", sub.is_zero());
                    if base.is_polynomial_ring() {
                        blk.kv("rank", module_rank(module)?);
                    }
                    let m = Matrix::from_columns(sub.rank(), sub.generators().to_vec())?;
                    blk.kv("matrix", m.display(base));
                    body.block(key, blk);
                }
                body.kv("phi", seq.phi.matrix().display(s.ring()));
                body.kv("psi", seq.psi.matrix().display(s.ring()));
                body.kv("exact", true);
                format!(
                    "k = {}, A has {} generators, B has {}",
                    seq.k,
                    seq.a.generators().len(),
                    seq.b.generators().len()
                )
            }
            Command::K0 { module } => {
                let m = model.module(module)?;
                let cat = Catalog::detect(m.ring())?;
                let class = cat.class_decompose(m)?;
                let group = cat.grothendieck_group()?;
                body.kv("family", cat.family).kv("class", &class);
                let coords: Vec<String> = cat.project(&class).iter().map(|c| c.to_string()).collect();
                let mut g = Block::new();
                g.kv("generators", group.labels.join(", "));
                g.kv("relations", int_matrix_display(&group.relations));
                g.kv("invariant_factors", join(group.smith.diagonal()));
                g.kv("free_rank", group.free_rank());
                g.kv("group", &group);
                g.kv("coordinates", format!("({})", coords.join(", ")));
                body.block("grothendieck_group", g);
                match euler_class(m, depth) {
                    Ok(k) => body.kv("euler_class", k),
                    Err(e) => body.kv("euler_class", format!("unavailable: {e}")),
                };
                format!("[{module}] = {class}")
            }
            Command::Snf { matrix } => {
                let d = model.intmatrix(matrix)?;
                let smith = smith_normal_form(&d.rows, d.ncols);
                let labels = (1..=d.ncols).map(|i| format!("g{i}")).collect();
                let group = group_from_relations(labels, d.rows.clone())?;
                body.kv("u", int_matrix_display(&smith.u));
                body.kv("s", int_matrix_display(&smith.s));
                body.kv("v", int_matrix_display(&smith.v));
                body.kv("invariant_factors", join(smith.diagonal()));
                body.kv("free_rank", group.free_rank());
                body.kv("cokernel", &group);
                format!("SNF({matrix}) = {}", int_matrix_display(&smith.s))
            }
            Command::Report => return Err(Error::Model("`report` runs the tasks of a model file".into())),
        };
        Ok(Report {
            summary,
            body,
            rejected,
        })
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(", ")
    }
}

fn ideal_display(r: &QuotRing, gens: &[Poly]) -> String {
    let g: Vec<String> = gens.iter().map(|g| r.display(g)).collect();
    format!("({})", g.join(", "))
}

fn periodicity(p: Option<(usize, usize)>) -> String {
    match p {
        Some((s, p)) => format!("({s}, {p})"),
        None => "none".into(),
    }
}

fn length(m: &FPModule) -> Result<String> {
    Ok(match m.vector_space_dimension()? {
        Some(d) => d.to_string(),
        None => "infinite".into(),
    })
}

fn module_block(m: &FPModule) -> Block {
    let mut b = Block::new();
    b.kv("ring", m.ring().as_ref());
    b.kv("generators", m.ngens());
    b.kv("relations", m.relations().display(m.ring()));
    b
}

fn resolution_block(body: &mut Block, res: &FreeResolution) {
    let mut b = Block::new();
    b.kv("length", res.len());
    b.kv("terminated", res.terminated);
    b.kv("verified_depth", res.verified_depth);
    b.kv("periodicity", periodicity(res.periodicity));
    b.kv("ranks", join((0..=res.len()).map(|i| res.rank(i))));
    let mut maps = Block::new();
    for (i, m) in res.maps.iter().enumerate() {
        maps.kv(
            &format!("d{}", i + 1),
            format!("{}x{} {}", m.nrows(), m.ncols(), m.display(res.ring())),
        );
    }
    b.block("maps", maps);
    body.block("resolution", b);
}

fn g_verdict(v: &GVerdict) -> String {
    match v {
        GVerdict::PassUpToDepth(d) => format!("PassUpToDepth({d})"),
        GVerdict::Certified(CertifiedBy::SelfInjectiveRing) => "Certified(self_injective_ring)".into(),
        GVerdict::Certified(CertifiedBy::CompleteResolution(k)) => format!("Certified(complete_resolution, {k})"),
        GVerdict::Fail(f) => match f.degree {
            Some(m) => format!("Fail({}, m = {m})", f.condition),
            None => format!("Fail({})", f.condition),
        },
    }
}

fn gclass_block(body: &mut Block, report: &GClassReport) -> Result<()> {
    body.kv("depth", report.depth);
    for (key, list) in [("cond1", &report.cond1), ("cond2", &report.cond2)] {
        let mut b = Block::new();
        if list.is_empty() {
            b.kv("status", "not_checked");
        }
        for e in list {
            let v = if e.is_zero {
                "0".to_string()
            } else {
                format!("nonzero, length {}", length(&e.module)?)
            };
            b.kv(&format!("m{}", e.degree), v);
        }
        body.block(key, b);
    }
    body.kv("cond3", report.cond3.map_or("not_checked", |v| v.name()));
    body.kv("verdict", g_verdict(&report.verdict));
    if let GVerdict::Fail(f) = &report.verdict {
        let mut w = Block::new();
        w.kv("condition", f.condition);
        if let Some(m) = f.degree {
            w.kv("degree", m);
        }
        if let Some(e) = &f.ext {
            w.kv("length", length(e)?);
            w.block("ext", module_block(e));
        }
        if let Some(d) = f.duality {
            w.kv("duality", d.name());
        }
        body.block("witness", w);
    }
    Ok(())
}

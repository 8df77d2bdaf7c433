//! Task execution: dispatches each input task to the kernel and collects a
//! deterministic report.

use whopf_core::cleft2cross::{roundtrip_cleft, roundtrip_crossed, search_equivalence_par};
use whopf_core::cohom::verify_h2_bijection_par;
use whopf_core::comodule::{
    is_cleft, solve_convolution_inverse, verify_comodule_algebra, Coinvariants,
};
use whopf_core::crossed::{
    build_crossed_product, canonical_integral, comodule_structure, special_case_checks,
};
use whopf_core::error::Error;
use whopf_core::structure::{
    groupoid_algebra, verify_projection_identities, verify_weak_hopf,
};

use crate::input::{InputError, Resolver, TaskDecl};
use crate::report::TaskReport;

pub struct TaskOutcome {
    pub report: TaskReport,
    pub search_too_large: bool,
}

fn need<'t>(task: &TaskDecl, field: &'t Option<String>, what: &str) -> Result<&'t str, InputError> {
    match field {
        Some(s) => Ok(s.as_str()),
        None => Err(InputError {
            location: format!("tasks.{}", task.op),
            message: format!("missing required argument {what:?}"),
        }),
    }
}

/// Runs one task. `threads` is forwarded to the pure enumeration layers.
pub fn run_task(r: &Resolver, task: &TaskDecl, name: &str, threads: usize) -> TaskOutcome {
    let result = dispatch(r, task, name, threads);
    match result {
        Ok(report) => TaskOutcome {
            report,
            search_too_large: false,
        },
        Err(TaskError::Input(e)) => TaskOutcome {
            report: TaskReport::errored(name, &task.op, e.to_string()),
            search_too_large: false,
        },
        Err(TaskError::Kernel(e)) => {
            let too_large = matches!(e, Error::SearchSpaceTooLarge { .. });
            TaskOutcome {
                report: TaskReport::errored(name, &task.op, e.to_string()),
                search_too_large: too_large,
            }
        }
    }
}

enum TaskError {
    Input(InputError),
    Kernel(Error),
}

impl From<InputError> for TaskError {
    fn from(e: InputError) -> Self {
        TaskError::Input(e)
    }
}
impl From<Error> for TaskError {
    fn from(e: Error) -> Self {
        TaskError::Kernel(e)
    }
}

fn dispatch(
    r: &Resolver,
    task: &TaskDecl,
    name: &str,
    threads: usize,
) -> Result<TaskReport, TaskError> {
    match task.op.as_str() {
        "verify" => {
            let target = need(task, &task.hopf, "hopf")?;
            let h = r.hopf(target)?;
            let mut t = TaskReport::from_core(name, &task.op, &verify_weak_hopf(&h));
            t.absorb(&verify_projection_identities(&h));
            t.push_data("dim", h.space().dim());
            t.push_data("cocommutative", h.is_cocommutative());
            t.push_data("commutative", h.alg.is_commutative());
            t.push_data("hopf_unit", h.is_hopf_unit());
            Ok(t)
        }
        "groupoid" => {
            let gname = need(task, &task.groupoid, "groupoid")?;
            let g = r.groupoid(gname)?;
            let h = groupoid_algebra(&g, r.field).map_err(TaskError::Kernel)?;
            let mut t = TaskReport::from_core(name, &task.op, &verify_weak_hopf(&h));
            t.absorb(&verify_projection_identities(&h));
            t.push_data("objects", g.objects.len());
            t.push_data("morphisms", g.morphisms.len());
            t.push_data("dim", h.space().dim());
            Ok(t)
        }
        "comodule" => {
            let aname = need(task, &task.algebra, "algebra")?;
            let hname = need(task, &task.hopf, "hopf")?;
            let ca = r.comodule(aname, hname)?;
            let mut t = TaskReport::from_core(name, &task.op, &verify_comodule_algebra(&ca));
            let coinv = Coinvariants::compute(&ca).map_err(TaskError::Kernel)?;
            t.push_data("coinvariants_dim", coinv.ah.space.dim());
            Ok(t)
        }
        "cleft" => {
            let aname = need(task, &task.algebra, "algebra")?;
            let hname = need(task, &task.hopf, "hopf")?;
            if aname == hname {
                // the regular extension H_L ↪ H with f = id
                let ca = r.comodule(aname, hname)?;
                let f = ca.h.id();
                let finv =
                    solve_convolution_inverse(&ca, &f, r.max_enum).map_err(TaskError::Kernel)?;
                let coinv = Coinvariants::compute(&ca).map_err(TaskError::Kernel)?;
                let cert = is_cleft(&ca, &f, &finv, &coinv).map_err(TaskError::Kernel)?;
                let mut t = TaskReport::from_core(name, &task.op, &cert.report);
                t.push_data("cleft", cert.cleft);
                t.push_data("coinvariants_dim", coinv.ah.space.dim());
                Ok(t)
            } else {
                // the canonical extension A ↪ A×σH
                let cs = r.crossed_system(hname, aname)?;
                let cpd = build_crossed_product(&cs).map_err(TaskError::Kernel)?;
                let pc = comodule_structure(&cpd).map_err(TaskError::Kernel)?;
                let (cert, rep) = canonical_integral(&cpd, &pc).map_err(TaskError::Kernel)?;
                let mut t = TaskReport::from_core(name, &task.op, &rep);
                t.push_data("cleft", cert.cleft);
                t.push_data("product_dim", cpd.product.space.dim());
                Ok(t)
            }
        }
        "crossed" => {
            let aname = need(task, &task.algebra, "algebra")?;
            let hname = need(task, &task.hopf, "hopf")?;
            let cs = r.crossed_system(hname, aname)?;
            let cpd = build_crossed_product(&cs).map_err(TaskError::Kernel)?;
            let mut t = TaskReport::from_core(name, &task.op, &cpd.report);
            let pc = comodule_structure(&cpd).map_err(TaskError::Kernel)?;
            t.absorb(&pc.report);
            let (cert, rep) = canonical_integral(&cpd, &pc).map_err(TaskError::Kernel)?;
            t.absorb(&rep);
            let sc = special_case_checks(&cs);
            t.absorb(&sc.report);
            t.push_data("product_dim", cpd.product.space.dim());
            t.push_data("coinvariants_dim", pc.coinv.ah.space.dim());
            t.push_data("smash", sc.smash);
            t.push_data("twisted", sc.twisted);
            t.push_data("center_valued", sc.center_valued);
            t.push_data("cleft", cert.cleft);
            t.push_data("nabla_identity", cpd.nabla.is_identity());
            Ok(t)
        }
        "roundtrip" => {
            let hname = need(task, &task.hopf, "hopf")?;
            let aname = need(task, &task.algebra, "algebra")?;
            if aname == hname {
                // regular extension round trip only
                let ca = r.comodule(aname, hname)?;
                let f = ca.h.id();
                let finv =
                    solve_convolution_inverse(&ca, &f, r.max_enum).map_err(TaskError::Kernel)?;
                let coinv = Coinvariants::compute(&ca).map_err(TaskError::Kernel)?;
                let cert = is_cleft(&ca, &f, &finv, &coinv).map_err(TaskError::Kernel)?;
                let rt = roundtrip_cleft(&cert).map_err(TaskError::Kernel)?;
                let mut t = TaskReport::from_core(name, &task.op, &rt.report);
                t.push_data("cleft→crossed→cleft", "isomorphism verified");
                Ok(t)
            } else {
                let cs = r.crossed_system(hname, aname)?;
                let rep = roundtrip_crossed(&cs).map_err(TaskError::Kernel)?;
                let mut t = TaskReport::from_core(name, &task.op, &rep);
                let strict = rep
                    .get("phi.recovered")
                    .map(|i| i.passed)
                    .unwrap_or(false)
                    && rep.get("sigma.recovered").map(|i| i.passed).unwrap_or(false);
                t.push_data(
                    "crossed→cleft→crossed",
                    if strict { "exact equality" } else { "mismatch" },
                );
                // and the cleft round trip of the canonical extension
                let cpd = build_crossed_product(&cs).map_err(TaskError::Kernel)?;
                let pc = comodule_structure(&cpd).map_err(TaskError::Kernel)?;
                let (cert, _) = canonical_integral(&cpd, &pc).map_err(TaskError::Kernel)?;
                let rt = roundtrip_cleft(&cert).map_err(TaskError::Kernel)?;
                t.absorb(&rt.report);
                t.push_data("cleft→crossed→cleft", "isomorphism verified");
                Ok(t)
            }
        }
        "equiv" => {
            let hname = need(task, &task.hopf, "hopf")?;
            let lhs_name = need(task, &task.lhs, "lhs")?;
            let rhs_name = need(task, &task.rhs, "rhs")?;
            let lhs = r.crossed_system(hname, lhs_name)?;
            let rhs = r.crossed_system(hname, rhs_name)?;
            let out =
                search_equivalence_par(&lhs, &rhs, r.max_enum, threads).map_err(TaskError::Kernel)?;
            let mut t = TaskReport {
                name: name.to_string(),
                op: task.op.clone(),
                status: "pass".to_string(),
                items: Vec::new(),
                data: Vec::new(),
                error: None,
            };
            t.push_data("candidates", out.candidates);
            t.push_data("equivalent", out.witness.is_some());
            if let Some(w) = out.witness {
                t.absorb(&w.report);
            }
            Ok(t)
        }
        "h2" => {
            let hname = need(task, &task.hopf, "hopf")?;
            let aname = need(task, &task.algebra, "algebra")?;
            let cs = r.crossed_system(hname, aname)?;
            let cpd = build_crossed_product(&cs).map_err(TaskError::Kernel)?;
            let pc = comodule_structure(&cpd).map_err(TaskError::Kernel)?;
            let (cert, _) = canonical_integral(&cpd, &pc).map_err(TaskError::Kernel)?;
            let bij = verify_h2_bijection_par(&cert, r.max_enum, threads).map_err(TaskError::Kernel)?;
            let mut t = TaskReport::from_core(name, &task.op, &bij.report);
            t.push_data("cocycles", bij.cocycles.len());
            t.push_data("classes", bij.class_count);
            t.push_data("population", bij.population.len());
            t.push_data("population_classes", bij.population_class_count);
            // class table: size and enumeration-minimal representative
            for id in 0..bij.class_count {
                let members: Vec<usize> = bij
                    .classes
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.class_id == id)
                    .map(|(k, _)| k)
                    .collect();
                let rep = bij
                    .classes
                    .iter()
                    .position(|c| c.class_id == id && c.representative)
                    .unwrap_or(members[0]);
                t.push_data(
                    &format!("class_{id}"),
                    format!("size {}, representative cocycle #{rep}", members.len()),
                );
            }
            Ok(t)
        }
        other => Err(TaskError::Input(InputError {
            location: "tasks".to_string(),
            message: format!("unknown op {other:?}"),
        })),
    }
}

//! Engine soundness: for every law the checker knows, a deliberately broken
//! fixture must FAIL with a witness, and replaying the witness's two
//! composite paths through the public operations must reproduce the reported
//! lhs and rhs exactly.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use mlb_core::compose::{derive_distlaw, list_sequence, sequence, DistLaw};
use mlb_core::lawcheck::*;
use mlb_core::monad::{Monad, SelfTestMonad};
use mlb_core::signature::{self, dest, op, SignatureSpec, TermView};
use mlb_core::strength::{
    builtin_strength, extend_gamma, lst_gamma, product_components, product_val,
    reconstruct_gamma, rst_gamma, Nesting, Strength, StrengthKind,
};
use mlb_core::value::{Bounds, FnTable, Universe, Val};

type Replay = Box<dyn Fn(&[Val]) -> (Val, Val)>;

struct Case {
    law: LawId,
    report: LawReport,
    replay: Replay,
}

fn u(name: &str, syms: &[&str]) -> Universe {
    Universe::of_syms(name, syms.iter().copied())
}

fn bounds() -> Bounds {
    Bounds::default()
}

fn cfg() -> RunConfig {
    RunConfig::default()
}

fn compose_tables(f: &FnTable, g: &FnTable) -> FnTable {
    FnTable::new(
        f.domain.clone(),
        "",
        f.entries.iter().map(|v| g.apply(v).unwrap().clone()).collect(),
    )
}

fn powerset_tree_base() -> DistLaw {
    let sig = SignatureSpec::binary_tree();
    let k = Monad::powerset();
    let mut family = BTreeMap::new();
    family.insert(
        "N".to_string(),
        builtin_strength("powerset_product", k.clone(), Some(2), None).unwrap(),
    );
    family.insert(
        "E".to_string(),
        builtin_strength("powerset_product", k.clone(), Some(0), None).unwrap(),
    );
    derive_distlaw(&sig, k, family).unwrap()
}

fn cases() -> Vec<Case> {
    let a = u("A", &["a0", "a1"]);
    let b = u("B", &["b0", "b1"]);
    let c = u("C", &["c0", "c1"]);
    let mut cases: Vec<Case> = Vec::new();

    // MONAD_LEFT_UNIT: unit duplicates its argument.
    {
        let m = Monad::self_test(SelfTestMonad::UnitDup);
        let reports = check_monad_laws(&m, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::MonadLeftUnit).unwrap();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::MonadLeftUnit,
            report,
            replay: Box::new(move |inp| {
                let f = inp[1].as_table();
                (
                    mm.bind(&mm.unit(&inp[0]), f).unwrap(),
                    f.apply(&inp[0]).unwrap().clone(),
                )
            }),
        });
    }

    // MONAD_RIGHT_UNIT: join drops the first inner list.
    {
        let m = Monad::self_test(SelfTestMonad::JoinDropFirst);
        let reports = check_monad_laws(&m, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::MonadRightUnit).unwrap();
        let mm = m.clone();
        let unit_table = m.unit_table(&a.values);
        cases.push(Case {
            law: LawId::MonadRightUnit,
            report,
            replay: Box::new(move |inp| {
                (mm.bind(&inp[0], &unit_table).unwrap(), inp[0].clone())
            }),
        });
    }

    // MONAD_ASSOC: join reverses the outer list.
    {
        let m = Monad::self_test(SelfTestMonad::JoinReverse);
        let reports = check_monad_laws(&m, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::MonadAssoc).unwrap();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::MonadAssoc,
            report,
            replay: Box::new(move |inp| {
                let (ma, f, g) = (&inp[0], inp[1].as_table(), inp[2].as_table());
                let lhs = mm.bind(&mm.bind(ma, f).unwrap(), g).unwrap();
                let fg = mm.kleisli_compose(f, g).unwrap();
                (lhs, mm.bind(ma, &fg).unwrap())
            }),
        });
    }

    // FUNCTOR_ID: fmap deduplicates consecutive images.
    {
        let m = Monad::self_test(SelfTestMonad::FmapDedup);
        let reports = check_monad_laws(&m, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::FunctorId).unwrap();
        let mm = m.clone();
        let id = FnTable::identity(&a.values, &a.name);
        cases.push(Case {
            law: LawId::FunctorId,
            report,
            replay: Box::new(move |inp| (mm.fmap(&id, &inp[0]).unwrap(), inp[0].clone())),
        });
    }

    // FUNCTOR_COMP: fmap appends the first image again.
    {
        let m = Monad::self_test(SelfTestMonad::FmapAppendFirstImage);
        let reports = check_monad_laws(&m, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::FunctorComp).unwrap();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::FunctorComp,
            report,
            replay: Box::new(move |inp| {
                let (ma, f, g) = (&inp[0], inp[1].as_table(), inp[2].as_table());
                let lhs = mm.fmap(g, &mm.fmap(f, ma).unwrap()).unwrap();
                (lhs, mm.fmap(&compose_tables(f, g), ma).unwrap())
            }),
        });
    }

    // PRESTRENGTH_NATURALITY: lstΓ on lists, but the output order reverses
    // when the first argument is exactly [a0].
    {
        let m = Monad::list();
        let trigger = Val::list(vec![Val::sym("a0")]);
        let mk = move |m: &Monad, args: &[Val]| {
            let base = lst_gamma(m, &args[0], &args[1])?;
            if args[0] == trigger {
                let mut items = base.as_list().to_vec();
                items.reverse();
                Ok(Val::List(items))
            } else {
                Ok(base)
            }
        };
        let g = Strength::custom("twisted_lst_gamma", m.clone(), 2, StrengthKind::KleisliCandidate, mk);
        let report =
            check_prestrength_naturality(&g, &[a.clone(), b.clone()], &bounds(), &cfg()).unwrap();
        let gg = g.clone();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::PrestrengthNaturality,
            report,
            replay: Box::new(move |inp| {
                let (m1, m2, f1, f2) = (&inp[0], &inp[1], inp[2].as_table(), inp[3].as_table());
                let lhs = gg
                    .apply(&[mm.fmap(f1, m1).unwrap(), mm.fmap(f2, m2).unwrap()])
                    .unwrap();
                let inner = gg.apply(&[m1.clone(), m2.clone()]).unwrap();
                let rhs = mm
                    .fmap_res(
                        &|t| {
                            let cps = product_components(t, 2)?;
                            Ok(product_val(&[
                                f1.apply(&cps[0])?.clone(),
                                f2.apply(&cps[1])?.clone(),
                            ]))
                        },
                        &inner,
                    )
                    .unwrap();
                (lhs, rhs)
            }),
        });
    }

    // GAMMA_A: the product of two singletons comes out empty.
    {
        let m = Monad::list();
        let g = Strength::custom(
            "empty_on_units",
            m.clone(),
            2,
            StrengthKind::KleisliCandidate,
            |m, args| {
                let (l1, l2) = (args[0].as_list(), args[1].as_list());
                if l1.len() == 1 && l2.len() == 1 {
                    return Ok(Val::list(vec![]));
                }
                lst_gamma(m, &args[0], &args[1])
            },
        );
        let report = check_gamma_a(&g, &[a.clone(), b.clone()], &bounds(), &cfg()).unwrap();
        let gg = g.clone();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::GammaA,
            report,
            replay: Box::new(move |inp| {
                (
                    gg.apply(&[mm.unit(&inp[0]), mm.unit(&inp[1])]).unwrap(),
                    mm.unit(&product_val(&[inp[0].clone(), inp[1].clone()])),
                )
            }),
        });
    }

    // GAMMA_B: the comprehension prestrength on nonempty lists.
    {
        let m = Monad::nonempty_list();
        let g = builtin_strength("comprehension", m.clone(), None, None).unwrap();
        let report = check_gamma_b(&g, &[a.clone(), b.clone()], &bounds(), &cfg()).unwrap();
        let gg = g.clone();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::GammaB,
            report,
            replay: Box::new(move |inp| {
                let at_kv = gg.apply(inp).unwrap();
                let pushed = mm
                    .fmap_res(&|t| gg.apply(&product_components(t, 2)?), &at_kv)
                    .unwrap();
                let lhs = mm.join(&pushed).unwrap();
                let rhs = gg
                    .apply(&[mm.join(&inp[0]).unwrap(), mm.join(&inp[1]).unwrap()])
                    .unwrap();
                (lhs, rhs)
            }),
        });
    }

    // GAMMA_ASSOC: exceptions with a side-dependent default pick.
    {
        let exc2 = u("Exc2", &["e1", "e2"]);
        let m = Monad::exceptions("exceptions2", exc2);
        let g = Strength::custom(
            "side_dependent_default",
            m.clone(),
            2,
            StrengthKind::KleisliCandidate,
            |_, args| {
                let is_ok = |v: &Val| matches!(v, Val::Tagged(t, _) if t == "ok");
                match (&args[0], &args[1]) {
                    (Val::Tagged(t1, Some(x)), Val::Tagged(t2, Some(y)))
                        if t1 == "ok" && t2 == "ok" =>
                    {
                        Ok(Val::ok(product_val(&[(**x).clone(), (**y).clone()])))
                    }
                    _ if is_ok(&args[0]) => Ok(Val::exc(Val::sym("e1"))),
                    _ => Ok(Val::exc(Val::sym("e2"))),
                }
            },
        );
        let report =
            check_gamma_assoc(&g, &[a.clone(), b.clone(), c.clone()], &bounds(), &cfg()).unwrap();
        let left = extend_gamma(&g, 3, Nesting::Left).unwrap();
        let right = extend_gamma(&g, 3, Nesting::Right).unwrap();
        cases.push(Case {
            law: LawId::GammaAssoc,
            report,
            replay: Box::new(move |inp| {
                (left.apply(inp).unwrap(), right.apply(inp).unwrap())
            }),
        });
    }

    // LIFT_C: λ on the identity functor that erases singletons.
    {
        let h = Monad::list();
        let k = Monad::list();
        let lam = LiftTransform::new("erase_singletons", |l: &Val| {
            let items = l.as_list();
            if items.len() == 1 {
                Ok(Val::list(vec![]))
            } else {
                Ok(l.clone())
            }
        });
        let reports = check_lift_transformation(
            &FunctorDesc::Identity,
            &h,
            &k,
            &lam,
            &a,
            &bounds(),
            &cfg(),
        )
        .unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::LiftC).unwrap();
        let (hh, kk, ll) = (h.clone(), k.clone(), lam.clone());
        cases.push(Case {
            law: LawId::LiftC,
            report,
            replay: Box::new(move |inp| {
                (ll.apply(&hh.unit(&inp[0])).unwrap(), kk.unit(&inp[0]))
            }),
        });
    }

    // LIFT_D: λ on the identity functor that reverses two-element lists.
    {
        let h = Monad::list();
        let k = Monad::list();
        let lam = LiftTransform::new("reverse_pairs", |l: &Val| {
            let items = l.as_list();
            if items.len() == 2 {
                Ok(Val::list(vec![items[1].clone(), items[0].clone()]))
            } else {
                Ok(l.clone())
            }
        });
        let reports = check_lift_transformation(
            &FunctorDesc::Identity,
            &h,
            &k,
            &lam,
            &a,
            &bounds(),
            &cfg(),
        )
        .unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::LiftD).unwrap();
        let (hh, kk, ll) = (h.clone(), k.clone(), lam.clone());
        cases.push(Case {
            law: LawId::LiftD,
            report,
            replay: Box::new(move |inp| {
                let lhs = ll.apply(&hh.join(&inp[0]).unwrap()).unwrap();
                let staged = ll.apply(&inp[0]).unwrap();
                let pushed = kk.fmap_res(&|fha| ll.apply(fha), &staged).unwrap();
                (lhs, kk.join(&pushed).unwrap())
            }),
        });
    }

    // RST_LIFT_1: broken fmap makes rst disagree with the unit.
    {
        let m = Monad::self_test(SelfTestMonad::FmapAppendFirstImage);
        let reports = check_rst_lift(&m, &a, &b, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().next().unwrap();
        assert_eq!(report.law, LawId::RstLift1);
        let mm = m.clone();
        cases.push(Case {
            law: LawId::RstLift1,
            report,
            replay: Box::new(move |inp| {
                (
                    mlb_core::strength::rst(&mm, &inp[0], &mm.unit(&inp[1])),
                    mm.unit(&Val::tuple(vec![inp[0].clone(), inp[1].clone()])),
                )
            }),
        });
    }

    // RST_LIFT_2: join that drops the marked singleton breaks the second
    // lifting equation.
    {
        let ints = Universe::of_ints("I", [1, 2]);
        let m = Monad::self_test(SelfTestMonad::JoinDropSingletonOne);
        let reports = check_rst_lift(&m, &a, &ints, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().nth(1).unwrap();
        assert_eq!(report.law, LawId::RstLift2);
        let mm = m.clone();
        cases.push(Case {
            law: LawId::RstLift2,
            report,
            replay: Box::new(move |inp| {
                let staged = mlb_core::strength::rst(&mm, &inp[0], &inp[1]);
                let pushed = mm
                    .fmap_res(
                        &|pair| {
                            let cps = product_components(pair, 2)?;
                            Ok(mlb_core::strength::rst(&mm, &cps[0], &cps[1]))
                        },
                        &staged,
                    )
                    .unwrap();
                let lhs = mm.join(&pushed).unwrap();
                let rhs =
                    mlb_core::strength::rst(&mm, &inp[0], &mm.join(&inp[1]).unwrap());
                (lhs, rhs)
            }),
        });
    }

    // COMMUTATIVE: exceptions with two exception values.
    {
        let m = Monad::exceptions("exceptions2", u("Exc2", &["e1", "e2"]));
        let report = check_commutative(&m, &a, &b, &bounds(), &cfg()).unwrap();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::Commutative,
            report,
            replay: Box::new(move |inp| {
                (
                    lst_gamma(&mm, &inp[0], &inp[1]).unwrap(),
                    rst_gamma(&mm, &inp[0], &inp[1]).unwrap(),
                )
            }),
        });
    }

    // PRODUCT_COHERENCE: the derived left prestrength on two exceptions.
    {
        let m = Monad::exceptions("exceptions2", u("Exc2", &["e1", "e2"]));
        let g = Strength::derived_left(m.clone());
        let universes = [
            u("PA", &["pa"]),
            u("PB", &["pb"]),
            u("PC", &["pc"]),
            u("PB2", &["pb2"]),
            u("PC2", &["pc2"]),
        ];
        let report = check_product_coherence(&g, &universes, &bounds(), &cfg()).unwrap();
        let gg = g.clone();
        let mm = m.clone();
        cases.push(Case {
            law: LawId::ProductCoherence,
            report,
            replay: Box::new(move |inp| {
                let x = &inp[0];
                let (f, gt, f2, g2) =
                    (inp[1].as_table(), inp[2].as_table(), inp[3].as_table(), inp[4].as_table());
                let fa = f.apply(x).unwrap().clone();
                let ga = gt.apply(x).unwrap().clone();
                let comp1 = gg
                    .apply(&[mm.bind(&fa, f2).unwrap(), mm.bind(&ga, g2).unwrap()])
                    .unwrap();
                let paired = gg.apply(&[fa, ga]).unwrap();
                let comp2 = mm
                    .bind_res(&paired, &|prod| {
                        let cps = product_components(prod, 2)?;
                        gg.apply(&[
                            f2.apply(&cps[0])?.clone(),
                            g2.apply(&cps[1])?.clone(),
                        ])
                    })
                    .unwrap();
                (comp1, comp2)
            }),
        });
    }

    // DL_A: λ that sends the empty-tree constant to the empty set.
    {
        let base = powerset_tree_base();
        let (h, k) = (base.outer.clone(), base.inner.clone());
        let e_term = op("E", vec![]);
        let lam = {
            let e_term = e_term.clone();
            DistLaw::custom("lambda_empty_on_E", h.clone(), k.clone(), move |hk| {
                if *hk == e_term {
                    Ok(Val::set(vec![]))
                } else {
                    base.apply(hk)
                }
            })
        };
        let reports = check_distributive_law(&lam, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::DlA).unwrap();
        let (hh, kk, ll) = (h, k, lam);
        cases.push(Case {
            law: LawId::DlA,
            report,
            replay: Box::new(move |inp| {
                let staged = hh.fmap_res(&|v| Ok(kk.unit(v)), &inp[0]).unwrap();
                (ll.apply(&staged).unwrap(), kk.unit(&inp[0]))
            }),
        });
    }

    // DL_B: sequence over the list monad.
    {
        let dl = list_sequence(Monad::list());
        let reports = check_distributive_law(&dl, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::DlB).unwrap();
        let (hh, kk, ll) = (dl.outer.clone(), dl.inner.clone(), dl.clone());
        cases.push(Case {
            law: LawId::DlB,
            report,
            replay: Box::new(move |inp| {
                let joined = hh.fmap_res(&|kkv| kk.join(kkv), &inp[0]).unwrap();
                let lhs = ll.apply(&joined).unwrap();
                let staged = ll.apply(&inp[0]).unwrap();
                let pushed = kk.fmap_res(&|hk| ll.apply(hk), &staged).unwrap();
                (lhs, kk.join(&pushed).unwrap())
            }),
        });
    }

    // DL_C: λ that erases singleton variables.
    {
        let base = powerset_tree_base();
        let (h, k) = (base.outer.clone(), base.inner.clone());
        let lam = DistLaw::custom("lambda_erases_singletons", h.clone(), k.clone(), move |hk| {
            if let TermView::Var(kv) = dest(hk)? {
                if kv.as_set().len() == 1 {
                    return Ok(Val::set(vec![]));
                }
            }
            base.apply(hk)
        });
        let reports = check_distributive_law(&lam, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::DlC).unwrap();
        let (hh, kk, ll) = (h, k, lam);
        cases.push(Case {
            law: LawId::DlC,
            report,
            replay: Box::new(move |inp| {
                let lhs = ll.apply(&hh.unit(&inp[0])).unwrap();
                let rhs = kk.fmap_with(|v| hh.unit(v), &inp[0]);
                (lhs, rhs)
            }),
        });
    }

    // DL_D: λ that swaps root children once terms get deep.
    {
        let base = powerset_tree_base();
        let (h, k) = (base.outer.clone(), base.inner.clone());
        let swap_root = |t: &Val| -> Val {
            if let Ok(TermView::Op(sym, cs)) = dest(t) {
                if cs.len() == 2 {
                    return op(sym, vec![cs[1].clone(), cs[0].clone()]);
                }
            }
            t.clone()
        };
        let lam = {
            let k = k.clone();
            DistLaw::custom("lambda_swaps_deep_roots", h.clone(), k.clone(), move |hk| {
                let out = base.apply(hk)?;
                if signature::term_depth(hk)? >= 2 {
                    k.fmap_res(&|t| Ok(swap_root(t)), &out)
                } else {
                    Ok(out)
                }
            })
        };
        let reports = check_distributive_law(&lam, &a, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().find(|r| r.law == LawId::DlD).unwrap();
        let (hh, kk, ll) = (h, k, lam);
        cases.push(Case {
            law: LawId::DlD,
            report,
            replay: Box::new(move |inp| {
                let lhs = ll.apply(&hh.join(&inp[0]).unwrap()).unwrap();
                let staged = hh.fmap_res(&|hk| ll.apply(hk), &inp[0]).unwrap();
                let lifted = ll.apply(&staged).unwrap();
                let rhs = kk.fmap_res(&|hhv| hh.join(hhv), &lifted).unwrap();
                (lhs, rhs)
            }),
        });
    }

    // MAP_LIFT_FUNCTORIAL: the list monad.
    {
        let k = Monad::list();
        let report = check_map_lift(&k, &a, &b, &c, &bounds(), &cfg()).unwrap();
        let kk = k.clone();
        cases.push(Case {
            law: LawId::MapLiftFunctorial,
            report,
            replay: Box::new(move |inp| {
                let (l, f, g) = (inp[0].as_list(), inp[1].as_table(), inp[2].as_table());
                let fg = kk.kleisli_compose(f, g).unwrap();
                let mapped: Vec<Val> =
                    l.iter().map(|x| fg.apply(x).unwrap().clone()).collect();
                let lhs = sequence(&kk, &mapped).unwrap();
                let f_mapped: Vec<Val> =
                    l.iter().map(|x| f.apply(x).unwrap().clone()).collect();
                let f_bar = sequence(&kk, &f_mapped).unwrap();
                let rhs = kk
                    .bind_res(&f_bar, &|lb| {
                        let g_mapped: Result<Vec<Val>, _> =
                            lb.as_list().iter().map(|y| Ok(g.apply(y)?.clone())).collect();
                        sequence(&kk, &g_mapped?)
                    })
                    .unwrap();
                (lhs, rhs)
            }),
        });
    }

    // RECONSTRUCT: the comprehension prestrength is not a Kleisli strength,
    // so the second reconstruction composite (which builds rstΓ) diverges.
    {
        let m = Monad::nonempty_list();
        let g = builtin_strength("comprehension", m, None, None).unwrap();
        let reports = check_reconstruct(&g, &a, &b, &bounds(), &cfg()).unwrap();
        let report = reports.into_iter().nth(1).unwrap();
        assert_eq!(report.law, LawId::Reconstruct);
        let gg = g.clone();
        cases.push(Case {
            law: LawId::Reconstruct,
            report,
            replay: Box::new(move |inp| {
                let (_, c2) = reconstruct_gamma(&gg, &inp[0], &inp[1]).unwrap();
                (c2, gg.apply(&[inp[0].clone(), inp[1].clone()]).unwrap())
            }),
        });
    }

    cases
}

#[test]
fn every_law_has_a_failing_fixture_with_replayable_witness() {
    let cases = cases();
    let covered: BTreeSet<&str> = cases.iter().map(|c| c.law.as_str()).collect();
    let all: BTreeSet<&str> = LawId::ALL.iter().map(|l| l.as_str()).collect();
    assert_eq!(covered, all, "one broken fixture per law");

    for case in &cases {
        assert_eq!(case.report.law, case.law);
        assert_eq!(
            case.report.status,
            Status::Fail,
            "{} fixture must fail (subject {})",
            case.law,
            case.report.subject
        );
        let w = case.report.witness.as_ref().expect("FAIL carries a witness");
        let inputs: Vec<Val> = w.inputs.iter().map(|(_, v)| v.clone()).collect();
        let (lhs, rhs) = (case.replay)(&inputs);
        assert_eq!(lhs, w.lhs, "{}: lhs path replays exactly", case.law);
        assert_eq!(rhs, w.rhs, "{}: rhs path replays exactly", case.law);
        assert_ne!(w.lhs, w.rhs, "{}: witness legs differ", case.law);
    }
}

//! Acceptance suite. Run with `--nocapture` to see one line per criterion.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use gentle_cli::dsl::parse_presentation;
use gentle_core::families;
use gentle_core::gentle::{validate_gentle, GentleAlgebra};
use gentle_core::gp::{
    certify_word, classify_gp, compare_derived_invariant, gp_oracle, singularity_descriptor, stable_category_table,
    sweep_words, Verdict,
};
use gentle_core::homology::{default_bound, injective_dimension, ModuleCategory, DEFAULT_RESOLUTION_CAP};
use gentle_core::string::{band_module, contains_peak, enumerate_strings, string_module, BandWord};
use gentle_core::surface::{algebra_from_triangulation, inner_triangles, verify_inner_triangle_count};
use gentle_core::{Field, Rational};
use serde_json::Value;

type Q = Rational;
type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Value {
    let mut argv = vec!["gentle"];
    argv.extend_from_slice(args);
    let out = gentle_cli::run(argv);
    serde_json::from_str(&out.stdout).expect("JSON output")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn rotations(s: &str) -> BTreeSet<String> {
    (0..s.len()).map(|i| format!("{}{}", &s[i..], &s[..i])).collect()
}

fn criterion_1() -> Check {
    let file = data("example.gentle");
    let cycles = cli(&["cycles", &file]);
    let got: Vec<(String, u64)> = cycles["cycles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["notation"].as_str().unwrap().to_string(), c["length"].as_u64().unwrap()))
        .collect();
    let expected = ["jfe", "kgh"];
    ensure(got.len() == 2, || format!("cycles {got:?}"))?;
    for want in expected {
        ensure(got.iter().any(|(n, l)| *l == 3 && rotations(n).contains(want)), || {
            format!("no cycle equal to {want} up to rotation in {got:?}")
        })?;
    }

    let gp = cli(&["gp", &file]);
    ensure(gp["projective_count"] == 8, || format!("projectives {}", gp["projective_count"]))?;
    let modules: BTreeSet<&str> =
        gp["nonprojective"].as_array().unwrap().iter().map(|m| m["module"].as_str().unwrap()).collect();
    let want: BTreeSet<&str> = ["R(e)", "R(f)", "R(j)", "R(g)", "R(h)", "R(k)"].into();
    ensure(modules == want, || format!("non-projective GPs {modules:?}"))?;

    let dsg = cli(&["dsg", &file]);
    ensure(dsg["descriptor"] == serde_json::json!([3, 3]), || format!("descriptor {}", dsg["descriptor"]))
}

fn criterion_2() -> Check {
    let alg = families::example();
    let q = alg.quiver();
    let dims = |name: &str| {
        let a = q.arrow_index(name).unwrap();
        let by_word = string_module::<Q>(&alg, &alg.radical_summand(a).unwrap().word).dims().to_vec();
        let built = ModuleCategory::<Q>::new(&alg).radical_summand(a).dims().to_vec();
        assert_eq!(by_word, built);
        built
    };
    let unit = |v: &str| {
        let mut e = vec![0; q.vertex_count()];
        e[q.vertex_index(v).unwrap()] = 1;
        e
    };
    ensure(dims("k") == unit("8"), || format!("R(k) {:?}", dims("k")))?;
    ensure(dims("h") == unit("4"), || format!("R(h) {:?}", dims("h")))?;
    let j = dims("j");
    let support: BTreeSet<&str> = (0..j.len()).filter(|&v| j[v] > 0).map(|v| q.vertex_name(v)).collect();
    ensure(j.iter().sum::<usize>() == 6 && support == ["6", "5", "1", "2", "7", "8"].into(), || format!("R(j) {j:?}"))?;
    let e = dims("e");
    let at = |v: &str| e[q.vertex_index(v).unwrap()];
    ensure(e.iter().sum::<usize>() == 10 && at("2") == 2 && at("7") == 2, || format!("R(e) {e:?}"))
}

fn criterion_3() -> Check {
    let mut fixtures = vec![("example".to_string(), families::example())];
    fixtures.extend((2..=5).map(|n| (format!("Lambda{n}"), families::lambda(n))));
    fixtures.extend((2..=4).map(|n| (format!("I{n}"), families::nakayama(n))));
    fixtures.push(("A2".into(), families::a2()));
    fixtures.push(("fan5".into(), families::fan5()));
    let mut words = 0;
    for (name, alg) in &fixtures {
        let cat = ModuleCategory::<Q>::new(alg);
        let c = classify_gp(alg);
        let bound = default_bound(alg);
        for w in sweep_words(alg, &c, 6) {
            let check = certify_word(&cat, &c, &w, bound);
            let text = w.to_text(alg.quiver());
            ensure(check.certificate.verdict != Verdict::Inconclusive, || format!("{name}: {text} inconclusive"))?;
            ensure(!check.disagrees(), || {
                format!(
                    "{name}: {text} predicted {} but oracle says {}",
                    check.predicted_gp,
                    check.certificate.verdict.as_str()
                )
            })?;
            words += 1;
        }
    }
    println!("    {words} string modules checked");
    Ok(())
}

fn criterion_4() -> Check {
    for (name, alg) in families::named_algebras() {
        let cat = ModuleCategory::<Q>::new(&alg);
        let q = alg.quiver();
        for c in alg.critical_cycles() {
            for &a in c.arrows() {
                let r = cat.radical_summand(a);
                let b =
                    alg.relation_successor(a).ok_or_else(|| format!("{name}: {} has no successor", q.arrow_name(a)))?;
                let cover = cat.projective_cover(r);
                let top = q.arrow(a).target;
                ensure(cover.summands == [top], || {
                    format!("{name}: cover of R({}) is {:?}", q.arrow_name(a), cover.summands)
                })?;
                ensure(q.arrow(b).source == top, || format!("{name}: kernel arrow leaves the wrong vertex"))?;
                let p = cat.projective(top).dims();
                let k = cat.radical_summand(b).dims();
                ensure((0..p.len()).all(|v| p[v] == r.dims()[v] + k[v]), || {
                    format!("{name}: dim P != dim R({}) + dim R({})", q.arrow_name(b), q.arrow_name(a))
                })?;
                let omega = cat.syzygy(r);
                ensure(cat.signature(&omega) == cat.signature(cat.radical_summand(b)), || {
                    format!("{name}: syzygy of R({}) is not R({})", q.arrow_name(a), q.arrow_name(b))
                })?;
                let mut x = r.clone();
                for step in 1..=c.len() {
                    x = cat.syzygy(&x);
                    let closed = cat.signature(&x) == cat.signature(r);
                    ensure(closed == (step == c.len()), || {
                        format!(
                            "{name}: orbit of R({}) closes at step {step}, cycle length {}",
                            q.arrow_name(a),
                            c.len()
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let alg = families::example();
    let cat = ModuleCategory::<Q>::new(&alg);
    let t = stable_category_table(&cat).map_err(|e| e.to_string())?;
    ensure(t.objects.len() == 6, || format!("{} objects", t.objects.len()))?;
    for (i, row) in t.stable_hom.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            ensure(d == usize::from(i == j), || format!("stable hom [{i}][{j}] = {d}"))?;
        }
    }
    let q = alg.quiver();
    let rk = cat.radical_summand(q.arrow_index("k").unwrap());
    let rj = cat.radical_summand(q.arrow_index("j").unwrap());
    ensure(cat.hom_dim(rk, rj) == 1, || format!("Hom(R(k), R(j)) = {}", cat.hom_dim(rk, rj)))?;
    ensure(cat.stable_hom_dim(rk, rj) == 0, || "a map R(k) -> R(j) survives in the stable category".into())
}

fn criterion_6() -> Check {
    for n in 2..=5 {
        let d = singularity_descriptor(&families::lambda(n));
        ensure(d.lengths == vec![2; n - 1], || format!("Lambda{n}: {:?}", d.lengths))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    for (name, alg) in families::named_algebras() {
        let cat = ModuleCategory::<Q>::new(&alg);
        let q = alg.quiver();
        for w in enumerate_strings(&alg, 6) {
            if contains_peak(&w) {
                let m = string_module::<Q>(&alg, &w);
                ensure(cat.embedding_obstruction(&m) > 0, || format!("{name}: {} embeds", w.to_text(q)))?;
            }
        }
        for a in 0..alg.arrow_count() {
            let word = alg.radical_summand(a).unwrap().word;
            ensure(word.is_directed(), || format!("{name}: R({}) word is not directed", q.arrow_name(a)))?;
            let m = string_module::<Q>(&alg, &word);
            ensure(cat.embedding_obstruction(&m) == 0, || format!("{name}: R({}) obstructed", q.arrow_name(a)))?;
        }
    }
    let alg = families::kronecker();
    let cat = ModuleCategory::<Q>::new(&alg);
    let band = BandWord::parse(&alg, "b,a^-1").map_err(|e| e.to_string())?;
    let m = band_module(&alg, &band, &Q::one(), 1).map_err(|e| e.to_string())?;
    ensure(m.dims() == [1, 1], || format!("band dims {:?}", m.dims()))?;
    ensure(cat.embedding_obstruction(&m) > 0, || "band module embeds".into())?;
    let cert = gp_oracle(&cat, &m, default_bound(&alg));
    ensure(cert.verdict == Verdict::NotGp, || format!("band verdict {}", cert.verdict.as_str()))
}

fn criterion_8() -> Check {
    let hex = families::hexagon();
    let q = algebra_from_triangulation(&hex);
    ensure(q.is_isomorphic(&families::cyclic_nakayama(3)), || "hexagon algebra is not I_3".into())?;
    let r = verify_inner_triangle_count(&hex).map_err(|v| format!("{} violations", v.len()))?;
    ensure(inner_triangles(&hex).count == 1 && r.inner.count == 1, || format!("inner count {}", r.inner.count))?;
    ensure(r.descriptor == [3] && r.holds, || format!("hexagon descriptor {:?}", r.descriptor))?;

    let fan = families::fan(5);
    let r = verify_inner_triangle_count(&fan).map_err(|v| format!("{} violations", v.len()))?;
    ensure(r.inner.count == 0 && r.descriptor.is_empty() && r.holds, || {
        format!("fan5 inner {} descriptor {:?}", r.inner.count, r.descriptor)
    })?;

    let out = cli(&["surface", &data("hexagon.tri")]);
    ensure(out["count_matches"] == true && out["inner_triangles"]["count"] == 1, || format!("surface {out}"))
}

fn criterion_9() -> Check {
    let c = compare_derived_invariant(&families::lambda(3), &families::lambda(4));
    ensure(!c.compatible() && c.witness.is_some(), || "Lambda3 and Lambda4 compatible".into())?;
    let c = compare_derived_invariant(&families::example(), &families::two_triangles());
    ensure(c.compatible(), || format!("example vs two triangles: {:?}", c.witness))?;
    let text = std::fs::read_to_string(data("two_triangles.gentle")).map_err(|e| e.to_string())?;
    let two: GentleAlgebra = validate_gentle(&parse_presentation(&text).map_err(|e| e.to_string())?)
        .map_err(|v| format!("{} violations", v.len()))?;
    ensure(two.critical_cycles().len() == 2, || "two-triangle file".into())?;
    let out = cli(&["compare", &data("lambda3.gentle"), &data("lambda4.gentle")]);
    ensure(out["compatible"] == false, || format!("compare {out}"))
}

fn criterion_10() -> Check {
    for n in 2..=4 {
        let d = injective_dimension::<Q>(&families::nakayama(n), DEFAULT_RESOLUTION_CAP).map_err(|e| e.to_string())?;
        ensure(d == 0, || format!("I{n} has injective dimension {d}"))?;
    }
    for (name, alg) in families::named_algebras() {
        let d = injective_dimension::<Q>(&alg, DEFAULT_RESOLUTION_CAP).map_err(|e| format!("{name}: {e}"))?;
        println!("    {name}: injective dimension {d}");
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("example cycles, classification and descriptor", criterion_1),
        ("dimension vectors of R(k), R(h), R(j), R(e)", criterion_2),
        ("oracle agrees with the classifier on every string up to 6 letters", criterion_3),
        ("syzygy orbits close with the cycle length", criterion_4),
        ("stable hom matrix is the identity", criterion_5),
        ("Lambda_n descriptors", criterion_6),
        ("peaks obstruct embeddings, band control", criterion_7),
        ("surface triangulations", criterion_8),
        ("derived invariant comparisons", criterion_9),
        ("selfinjective algebras and finite injective dimension", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS criterion {}: {name}", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("acceptance suite finished in {:.1?}", start.elapsed());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

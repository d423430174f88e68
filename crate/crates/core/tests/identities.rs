use formindex::complex_index::{complex_ph_index, realify, sign_power, ComplexForm};
use formindex::euler::euler_obstruction_point;
use formindex::gsv::gsv_generic_linear;
use formindex::local::Settings;
use formindex::milnor::{chi_fiber, generic_slice_milnor, milnor_number, GermSpec};
use formindex::poly::{parse, VariableContext};
use formindex::real_index::real_ph_index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn germ(names: &[&str], f: &[&str]) -> GermSpec {
    GermSpec::parse("t", &VariableContext::complex(names).unwrap(), f).unwrap()
}

fn germs() -> Vec<GermSpec> {
    vec![
        germ(&["x", "y"], &["y^2 - x^3"]),
        germ(&["x", "y"], &["y^2 - x^4"]),
        germ(&["x", "y"], &["x^2*y + y^3"]),
        germ(&["x", "y"], &["x^3 + y^3"]),
        germ(&["x", "y", "z"], &["x^2 + y^2 + z^2"]),
        germ(&["x", "y", "z"], &["x^2 + y^3 + z^4"]),
        germ(&["x", "y", "z", "w"], &["x^2 + y^2 + z^2 + w^2"]),
        germ(&["x", "y", "z"], &["x^2 + y^2 + z^2", "x"]),
        germ(&["x", "y", "z"], &["x^2 + y^2 + z^2", "x*y"]),
    ]
}

// Critical points of a generic linear function on the Milnor fiber.
#[test]
fn generic_linear_gsv_counts_critical_points() {
    let s = Settings::default();
    for g in germs() {
        let gsv = gsv_generic_linear(&g, 7, &s).unwrap().value;
        let mu = milnor_number(&g, &s).unwrap();
        let slice = generic_slice_milnor(&g, 7, &s).unwrap().value;
        assert_eq!(gsv, mu + slice, "{:?}", g.defining());
        let chi = chi_fiber(&g, &s).unwrap();
        let eu = euler_obstruction_point(&g, 7, &s).unwrap().eu;
        assert_eq!(gsv as i64, sign_power(g.n()) * (chi - eu), "{:?}", g.defining());
    }
}

#[test]
fn generic_values_do_not_depend_on_the_seed() {
    let s = Settings::default();
    for g in germs() {
        let a = gsv_generic_linear(&g, 7, &s).unwrap().value;
        let b = gsv_generic_linear(&g, 1234, &s).unwrap().value;
        assert_eq!(a, b);
        let ea = euler_obstruction_point(&g, 7, &s).unwrap().eu;
        let eb = euler_obstruction_point(&g, 99, &s).unwrap().eu;
        assert_eq!(ea, eb);
    }
}

#[test]
fn random_nondegenerate_forms() {
    let s = Settings::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for m in 1..=3usize {
        let names: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
        let ctx = VariableContext::complex(&names).unwrap();
        for _ in 0..4 {
            let coeffs: Vec<String> = (0..m)
                .map(|i| {
                    let j = (i + 1) % m;
                    let (a, b, c) = (rng.gen_range(1..5), rng.gen_range(-3..4), rng.gen_range(-3..4));
                    format!("{a}*{} + ({b})*{}^2 + ({c})*{}*{}", names[i], names[j], names[0], names[i])
                })
                .collect();
            let omega = ComplexForm::parse(&ctx, &coeffs).unwrap();
            assert_eq!(complex_ph_index(&omega, &s).unwrap(), 1, "{coeffs:?}");
            let real = real_ph_index(&realify(&omega).unwrap(), &s).unwrap().index;
            assert_eq!(real, sign_power(m), "{coeffs:?}");
        }
    }
}

#[test]
fn exact_forms_of_brieskorn_functions() {
    let s = Settings::default();
    let ctx = VariableContext::complex(&["x", "y", "z"]).unwrap();
    for (h, mu) in [("x^2 + y^3 + z^4", 6i64), ("x^3 + y^3 + z^3", 8), ("x^2 + y^2 + z^5", 4)] {
        let omega = ComplexForm::exact(&parse(&ctx, h).unwrap()).unwrap();
        assert_eq!(complex_ph_index(&omega, &s).unwrap() as i64, mu, "{h}");
        let real = real_ph_index(&realify(&omega).unwrap(), &s).unwrap().index;
        assert_eq!(real, -mu, "{h}");
    }
}

macro_rules! example {
    ($m:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $m {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(polynomials, "polynomials.rs");
example!(sl2_multiplets, "sl2_multiplets.rs");
example!(polar_forms, "polar_forms.rs");
example!(genus1_ode, "genus1_ode.rs");
example!(catalog_browse, "catalog_browse.rs");
example!(oracle_genus2, "oracle_genus2.rs");
example!(emit_formats, "emit_formats.rs");
example!(baker_variables, "baker_variables.rs");
example!(genus3_structure, "genus3_structure.rs");
example!(check_suites, "check_suites.rs");
example!(discrepancies, "discrepancies.rs");

#[test]
fn examples_run() {
    polynomials::run().unwrap();
    sl2_multiplets::run().unwrap();
    polar_forms::run().unwrap();
    genus1_ode::run().unwrap();
    catalog_browse::run().unwrap();
    oracle_genus2::run().unwrap();
    emit_formats::run().unwrap();
    baker_variables::run().unwrap();
    genus3_structure::run().unwrap();
    check_suites::run().unwrap();
    discrepancies::run().unwrap();
}

//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run().expect(stringify!($name));
        }
    };
}

example!(groebner_basics, "../examples/groebner_basics.rs");
example!(resolution_invariants, "../examples/resolution_invariants.rs");
example!(fullness_check, "../examples/fullness_check.rs");
example!(fedder_fthreshold, "../examples/fedder_fthreshold.rs");
example!(diagnostics, "../examples/diagnostics.rs");
example!(segre_fermat, "../examples/segre_fermat.rs");
example!(gluing, "../examples/gluing.rs");
example!(session_cli, "../examples/session_cli.rs");

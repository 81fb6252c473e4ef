macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(gellmann_basis, "gellmann_basis.rs");
example!(swap_matrices, "swap_matrices.rs");
example!(theorem_check, "theorem_check.rs");
example!(rectangular_swaps, "rectangular_swaps.rs");
example!(decompose_operator, "decompose_operator.rs");

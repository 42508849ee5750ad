//! Every example runs to completion; their own assertions are the checks.

macro_rules! example {
    ($($name:ident = $path:literal),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                #[path = $path]
                mod inner;
                inner::main().expect(concat!(stringify!($name), " example failed"));
            }
        )*
    };
}

example!(
    formulas = "../examples/formulas.rs",
    hf_compiler = "../examples/hf_compiler.rs",
    constructible = "../examples/constructible.rs",
    regularity = "../examples/regularity.rs",
    frames = "../examples/frames.rs",
    heyting_names = "../examples/heyting_names.rs",
    double_negation = "../examples/double_negation.rs",
    prover = "../examples/prover.rs",
);

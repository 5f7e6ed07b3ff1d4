"""
Numerical services of the Hessian Lelong laboratory.

- hermitian: Small dense Hermitian linear algebra and mixed discriminants
- catalog: Model m-subharmonic functions, currents and the spec grammar
- integrate: Sphere/ball means, suprema and current masses
- lelong: Lelong functions and numbers, mean-value growth, Lelong-Jensen
- exponent: Sublevel volumes and integrability exponents
"""

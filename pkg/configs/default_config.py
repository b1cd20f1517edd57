# Run configuration for the finsler_scurv command line.
# Keys may be overridden from the command line with --cfg-options key=value.

workdir = "workdir"
tag = "finsler"
log_path = "finsler.log"
log_level = "INFO"
threads = None  # None: FINSLER_THREADS, then available parallelism

# report formatting
report_digits = 12

# norm validation
convexity_samples = 1000
isotropy_samples = 200
isotropy_tol = 1e-8

# sphere scan and isotropy verdict
scan_samples = 1000
tol_iso = 1e-8
vanish_tol = 1e-8
variance_tol = 1e-10
argmax_max_iter = 200
argmax_grad_tol = 1e-10

# oracles
fd_step = 1e-5
fd_tol = 1e-4
compare_tol = 1e-8
compare_cases = 200

# Busemann-Hausdorff sigma
mc_samples = 1000000
mc_margin = 1.05

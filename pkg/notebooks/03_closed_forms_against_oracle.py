"""
Closed forms against the BFS oracle
===================================

Every family has a closed-form expression for its centralities. We evaluate
those formulas directly and compare them with the oracle, vertex by vertex.
"""

# %%
from harmonic_families import FormulaQuery, Prism, Wheel, evaluate, generate
from harmonic_families.closed_forms import closed_form_vector
from harmonic_families.harmonic import normalized_vector
from harmonic_families.verify import sweep_all

spec = Prism(5)
print("formula:", [str(x) for x in closed_form_vector(spec)])
print("oracle: ", [str(x) for x in normalized_vector(generate(spec).graph)])

# %%
# ``evaluate`` reports the role used to choose the branch of the formula.
print(evaluate(FormulaQuery(Wheel(6), 0)))
print(evaluate(FormulaQuery(Wheel(6), 3)))

# %%
# The full default sweep takes a few seconds.
for report in sweep_all():
    print(report.summary())

# %%
# How the values decay with size, if matplotlib is available.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    from harmonic_families import Crown, Cycle, Helm, Path

    ms = range(4, 41)
    fig, ax = plt.subplots()
    ax.plot(ms, [float(closed_form_vector(Cycle(m))[0]) for m in ms], label="cycle")
    ax.plot(ms, [float(closed_form_vector(Path(m))[0]) for m in ms], label="path end")
    ax.plot(ms, [float(closed_form_vector(Crown(m))[0]) for m in ms], label="crown")
    ax.plot(ms, [float(closed_form_vector(Helm(m))[1]) for m in ms], label="helm rim")
    ax.set_xlabel("m")
    ax.set_ylabel("normalized harmonic centrality")
    ax.legend()
    fig.savefig("closed_forms.png", dpi=100)
    print("wrote closed_forms.png")

from lspgen.decorations import decoration_identity
from lspgen.pipeline import run_pipeline


def test_counts_match_published_small():
    res = run_pipeline(1, 8, 1)
    assert [res.decorations[r] for r in range(1, 9)] \
        == [2, 2, 4, 6, 6, 20, 28, 58]
    assert [res.predecorations[r] for r in range(1, 9)] \
        == [1, 1, 1, 2, 2, 4, 2, 8]


def test_k2_rate_10():
    res = run_pipeline(10, 10, 2)
    assert res.decorations[10] == 168


def test_k3_filter():
    res = run_pipeline(5, 5, 3)
    assert res.decorations[5] == 4


def test_thread_counts_are_schedule_independent():
    base = run_pipeline(1, 7, 1)
    threaded = run_pipeline(1, 7, 1, threads=4)
    assert base.decorations == threaded.decorations
    assert base.predecorations == threaded.predecorations


def test_emission_matches_count():
    sink = []
    res = run_pipeline(1, 6, 1, on_decoration=sink.append)
    assert len(sink) == res.decoration_total()
    codes = {decoration_identity(d) for d in sink}
    assert len(codes) == len(sink)


def test_emitted_multiset_stable_across_threads():
    runs = []
    for threads in (1, 3):
        sink = []
        run_pipeline(1, 6, 1, on_decoration=sink.append, threads=threads)
        runs.append(sorted(decoration_identity(d) for d in sink))
    assert runs[0] == runs[1]

import json, time, torch
from irstd_diff.data import SynthSpec, synth_dataset
from irstd_diff.trainer import TrainConfig, train, load_checkpoint, models_from_checkpoint, evaluate_model

t0 = time.time()
train_set = synth_dataset(SynthSpec(count=200, resolution=64, seed=100, id_prefix="tr"))
test_set = synth_dataset(SynthSpec(count=50, resolution=64, seed=200, id_prefix="te"))

cfg = TrainConfig(steps=1500, batch=8, seed=0, scale_factor=4, resolution=64,
                  beta_start=1e-3, beta_end=0.2,
                  checkpoint_interval=250, eval_interval=250, eval_count=10,
                  log_interval=10)
records = train(cfg, train_set, ".exp/run2", eval_dataset=test_set)
print(f"train time: {(time.time()-t0)/60:.1f} min", flush=True)

payload = load_checkpoint(".exp/run2/last.pt")
_, _, enc, den, sched = models_from_checkpoint(payload)
rep, traces = evaluate_model(enc, den, sched, test_set, seed=0, with_roc=True)
print(f"final eval: IoU {rep.iou:.3f} Pd {rep.pd:.3f} Fa {rep.fa:.2e} AUC {rep.auc:.3f}", flush=True)

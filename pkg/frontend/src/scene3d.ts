import * as THREE from "three";
import { OrbitControls } from "three/examples/jsm/controls/OrbitControls.js";

import type { SceneSpec } from "./types";

/** What the app needs from a scene backend; tests plug in a stub. */
export interface SceneRenderer {
  render(spec: SceneSpec, colors: Record<string, string>): void;
  onParticleClick(callback: (pollutant: string) => void): void;
  onBoundaryExit(callback: () => void): void;
  dispose(): void;
}

// sphere-cluster size per molecule, one small sphere per atom
const ATOM_COUNT: Record<string, number> = {
  "PM10": 1, "PM2.5": 1, "NO": 2, "NO2": 3, "NOx": 3, "CO": 2,
  "SO2": 3, "O3": 3, "NH3": 4, "C6H6": 6, "C7H8": 7, "C8H10": 8,
};
const ATOM_RADIUS = 0.05;
const ATOM_SPACING = 0.09;

interface ParticleGroup {
  mesh: THREE.InstancedMesh;
  pollutant: string;
  positions: THREE.Vector3[];
  velocities: THREE.Vector3[];
  axes: THREE.Vector3[];
  spins: number[];
  scales: number[];
  atomOffsets: THREE.Vector3[];
}

/**
 * Browser particle cloud: one instanced mesh per pollutant whose molecules
 * are small sphere clusters, drifting with their spawn velocity and spinning
 * around their spawn axis. Clicking ray-picks a molecule; walking the camera
 * out of the airspace fires onBoundaryExit so the app can re-request the
 * scene.
 */
export class ThreeSceneRenderer implements SceneRenderer {
  private readonly scene = new THREE.Scene();
  private readonly camera: THREE.PerspectiveCamera;
  private readonly webgl: THREE.WebGLRenderer;
  private readonly controls: OrbitControls;
  private readonly raycaster = new THREE.Raycaster();
  private readonly clock = new THREE.Clock();
  private groups: ParticleGroup[] = [];
  private halfExtents = new THREE.Vector3(5, 2.5, 5);
  private clickCallback: ((pollutant: string) => void) | null = null;
  private boundaryCallback: (() => void) | null = null;
  private boundaryArmed = true;
  private disposed = false;

  constructor(private readonly container: HTMLElement) {
    this.camera = new THREE.PerspectiveCamera(70, 1, 0.01, 100);
    this.camera.position.set(0, 0.4, 2.2);
    this.webgl = new THREE.WebGLRenderer({ antialias: true });
    this.webgl.setClearColor(0x10141a);
    container.append(this.webgl.domElement);
    this.controls = new OrbitControls(this.camera, this.webgl.domElement);
    this.controls.enableDamping = true;

    this.scene.add(new THREE.AmbientLight(0xffffff, 0.7));
    const sun = new THREE.DirectionalLight(0xffffff, 1.2);
    sun.position.set(3, 5, 2);
    this.scene.add(sun);

    this.webgl.domElement.addEventListener("click", (event) => this.pick(event));
    window.addEventListener("resize", this.resize);
    this.resize();
    this.webgl.setAnimationLoop(() => this.tick());
  }

  render(spec: SceneSpec, colors: Record<string, string>): void {
    for (const group of this.groups) {
      this.scene.remove(group.mesh);
      group.mesh.geometry.dispose();
      (group.mesh.material as THREE.Material).dispose();
    }
    this.groups = [];

    const [hx, hy, hz] = spec.airspace.halfExtents;
    this.halfExtents.set(hx, hy, hz);
    // render distance: fade out at the configured range from the camera
    this.scene.fog = new THREE.Fog(0x10141a, spec.airspace.renderRange * 0.6,
                                   spec.airspace.renderRange);
    this.boundaryArmed = true;

    const byPollutant = new Map<string, SceneSpec["spawns"]>();
    for (const spawn of spec.spawns) {
      const bucket = byPollutant.get(spawn.pollutant) ?? [];
      bucket.push(spawn);
      byPollutant.set(spawn.pollutant, bucket);
    }

    for (const [pollutant, spawns] of byPollutant) {
      const atoms = ATOM_COUNT[pollutant] ?? 1;
      const offsets: THREE.Vector3[] = [];
      for (let a = 0; a < atoms; a++) {
        const angle = (a / atoms) * Math.PI * 2;
        offsets.push(
          atoms === 1
            ? new THREE.Vector3(0, 0, 0)
            : new THREE.Vector3(Math.cos(angle), Math.sin(angle), 0).multiplyScalar(ATOM_SPACING),
        );
      }
      const geometry = new THREE.SphereGeometry(ATOM_RADIUS, 10, 8);
      const material = new THREE.MeshStandardMaterial({
        color: new THREE.Color(colors[pollutant] ?? "#cccccc"),
        roughness: 0.55,
      });
      const mesh = new THREE.InstancedMesh(geometry, material, spawns.length * atoms);
      mesh.userData.pollutant = pollutant;
      this.groups.push({
        mesh,
        pollutant,
        positions: spawns.map((s) => new THREE.Vector3(...s.position)),
        velocities: spawns.map((s) => new THREE.Vector3(...s.velocity)),
        axes: spawns.map((s) => new THREE.Vector3(...s.rotationAxis)),
        spins: spawns.map((s) => s.angularSpeed),
        scales: spawns.map((s) => s.scale),
        atomOffsets: offsets,
      });
      this.scene.add(mesh);
    }
    this.updateMatrices(0);
  }

  onParticleClick(callback: (pollutant: string) => void): void {
    this.clickCallback = callback;
  }

  onBoundaryExit(callback: () => void): void {
    this.boundaryCallback = callback;
  }

  dispose(): void {
    this.disposed = true;
    this.webgl.setAnimationLoop(null);
    window.removeEventListener("resize", this.resize);
    this.controls.dispose();
    this.webgl.dispose();
    this.webgl.domElement.remove();
  }

  private resize = (): void => {
    const width = this.container.clientWidth || 640;
    const height = this.container.clientHeight || 480;
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
    this.webgl.setSize(width, height);
  };

  private pick(event: MouseEvent): void {
    if (!this.clickCallback) return;
    const rect = this.webgl.domElement.getBoundingClientRect();
    const pointer = new THREE.Vector2(
      ((event.clientX - rect.left) / rect.width) * 2 - 1,
      -((event.clientY - rect.top) / rect.height) * 2 + 1,
    );
    this.raycaster.setFromCamera(pointer, this.camera);
    const hits = this.raycaster.intersectObjects(this.groups.map((g) => g.mesh));
    const first = hits[0];
    if (first) {
      this.clickCallback(first.object.userData.pollutant as string);
    }
  }

  private updateMatrices(dt: number): void {
    const matrix = new THREE.Matrix4();
    const quaternion = new THREE.Quaternion();
    const rotated = new THREE.Vector3();
    for (const group of this.groups) {
      const atoms = group.atomOffsets.length;
      for (let i = 0; i < group.positions.length; i++) {
        const position = group.positions[i];
        position.addScaledVector(group.velocities[i], dt);
        // drift wraps at the airspace walls so the cloud never empties
        for (const axis of ["x", "y", "z"] as const) {
          const limit = this.halfExtents[axis];
          if (position[axis] > limit) position[axis] = -limit;
          if (position[axis] < -limit) position[axis] = limit;
        }
        quaternion.setFromAxisAngle(
          group.axes[i],
          group.spins[i] * this.clock.elapsedTime,
        );
        for (let a = 0; a < atoms; a++) {
          rotated.copy(group.atomOffsets[a]).multiplyScalar(group.scales[i]);
          rotated.applyQuaternion(quaternion);
          rotated.add(position);
          matrix.makeRotationFromQuaternion(quaternion);
          matrix.scale(new THREE.Vector3(group.scales[i], group.scales[i], group.scales[i]));
          matrix.setPosition(rotated);
          group.mesh.setMatrixAt(i * atoms + a, matrix);
        }
      }
      group.mesh.instanceMatrix.needsUpdate = true;
    }
  }

  private tick(): void {
    if (this.disposed) return;
    const dt = Math.min(this.clock.getDelta(), 0.1);
    this.controls.update();
    this.updateMatrices(dt);
    const p = this.camera.position;
    const outside =
      Math.abs(p.x) > this.halfExtents.x ||
      Math.abs(p.y) > this.halfExtents.y ||
      Math.abs(p.z) > this.halfExtents.z;
    if (outside && this.boundaryArmed && this.boundaryCallback) {
      this.boundaryArmed = false; // re-armed on the next render()
      this.boundaryCallback();
    }
    this.webgl.render(this.scene, this.camera);
  }
}

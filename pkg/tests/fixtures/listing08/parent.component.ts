import { Component, ViewChild } from '@angular/core';
import { ChildComponent } from './child.component';

@Component({
  selector: 'app-parent',
  template: `
    <app-child></app-child>
    <button (click)="init()">Init</button>
    <button (click)="activate()">Activate</button>
    <button (click)="disable()">Disable</button>
    <button (click)="increment()">Increment</button>
    <button (click)="reset()">Reset</button>
  `
})
export class ParentComponent {
  @ViewChild(ChildComponent) child!: ChildComponent;

  updateChild() {
    this.child.update('Updated by parent');
  }

  resetChild() {
    this.child.reset();
  }

  init() {
    this.child.init();
  }

  activate() {
    this.child.activate();
  }

  disable() {
    this.child.disable();
  }

  increment() {
    this.child.increment();
  }

  reset() {
    this.child.reset();
  }
}

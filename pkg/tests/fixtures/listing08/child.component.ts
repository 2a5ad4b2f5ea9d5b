import { Component } from '@angular/core';

@Component({
  selector: 'app-child',
  template: `<p>{{ message }} - {{ count }}</p>`
})
export class ChildComponent {
  message = 'Init';
  count = 0;

  update(msg: string) {
    this.message = msg;
    this.count++;
  }

  reset() {
    this.message = 'Init';
    this.count = 0;
  }

  init() {
    this.message = 'Ready';
  }

  activate() {
    this.message = 'Active';
  }

  disable() {
    this.message = 'Disabled';
  }

  increment() {
    this.count++;
  }
}

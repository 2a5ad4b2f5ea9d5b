import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-device-card',
  template: `<div>{{ name }}</div>`
})
export class DeviceCardComponent {
  name = input<string>();
  age = input<number>();
  email = input<string>();
  role = input<string>();
  isActive = input<boolean>();
  showAvatar = input<boolean>();
  highlight = input<boolean>();
  locale = input<string>();
}

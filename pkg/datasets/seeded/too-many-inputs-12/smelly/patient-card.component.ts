import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-patient-card',
  template: `<div>{{ name }}</div>`
})
export class PatientCardComponent {
  name = input<string>();
  age = input<number>();
  email = input<string>();
  role = input<string>();
  isActive = input<boolean>();
  showAvatar = input<boolean>();
  highlight = input<boolean>();
}
